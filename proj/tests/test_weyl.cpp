#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "schubert/errors.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

TEST_CASE("braid and involution relations") {
  RootSystem a2 = build_root_system(CartanType::make('A', 2));
  CHECK(from_word(a2, {1, 2, 1}) == from_word(a2, {2, 1, 2}));
  CHECK(from_word(a2, {1, 1}) == identity(a2));
  CHECK(from_word(a2, {1, 2, 1}).length() == 3);

  RootSystem b2 = build_root_system(CartanType::make('B', 2));
  CHECK(from_word(b2, {1, 2, 1, 2}) == from_word(b2, {2, 1, 2, 1}));
  CHECK(from_word(b2, {1, 2, 1}) != from_word(b2, {2, 1, 2}));

  RootSystem g2 = build_root_system(CartanType::make('G', 2));
  CHECK(from_word(g2, {1, 2, 1, 2, 1, 2}) == from_word(g2, {2, 1, 2, 1, 2, 1}));
  CHECK(from_word(g2, {1, 2, 1, 2, 1}) != from_word(g2, {2, 1, 2, 1, 2}));
}

TEST_CASE("length comes from inversions, not the word") {
  RootSystem rs = build_root_system(CartanType::make('A', 3));
  CHECK(from_word(rs, {1, 1, 1, 1}).length() == 0);
  CHECK(from_word(rs, {1, 2, 1, 2, 1, 2}).length() == 0);  // (s1 s2)^3 = e in A3
  CHECK(from_word(rs, {1, 2, 3, 1, 2, 1}).length() == 6);
  CHECK(from_word(rs, {3, 2, 1, 1, 2, 3}).length() == 0);
}

TEST_CASE("from_word validates letters") {
  RootSystem rs = build_root_system(CartanType::make('A', 2));
  CHECK_THROWS_AS(from_word(rs, {0}), std::invalid_argument);
  CHECK_THROWS_AS(from_word(rs, {3}), std::invalid_argument);
  CHECK_THROWS_AS(from_word(rs, {-1}), std::invalid_argument);
  CHECK(from_word(rs, std::vector<int>{}) == identity(rs));
}

TEST_CASE("action on roots, A2 by hand") {
  RootSystem rs = build_root_system(CartanType::make('A', 2));
  WeylElement s1 = from_word(rs, {1});
  Root a1 = Root::simple(2, 0), a2 = Root::simple(2, 1);
  CHECK(s1.apply(a1) == a1.negated());
  CHECK(s1.apply(a2) == Root::from_coords({1, 1}));
  CHECK(s1.apply_inverse(a2) == Root::from_coords({1, 1}));  // s1 is an involution

  WeylElement w0 = from_word(rs, {1, 2, 1});
  CHECK(w0.apply(a1) == a2.negated());
  CHECK(w0.apply(a2) == a1.negated());
}

TEST_CASE("descents read off the action matrices") {
  RootSystem rs = build_root_system(CartanType::make('A', 3));
  for (const WeylElement& w : generate_group(rs)) {
    for (int i = 0; i < 3; ++i) {
      CHECK(w.right_descent(i) == (mul_simple_right(w, i).length() < w.length()));
      CHECK(w.left_descent(i) == (mul_simple_left(i, w).length() < w.length()));
    }
  }
}

TEST_CASE("multiply, inverse, and simple products are consistent") {
  RootSystem rs = build_root_system(CartanType::make('B', 3));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 3);
  auto random_element = [&] {
    std::vector<int> word(20);
    for (int& x : word) x = letter(rng);
    return from_word(rs, word);
  };
  for (int trial = 0; trial < 60; ++trial) {
    WeylElement x = random_element(), y = random_element(), z = random_element();
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    CHECK(multiply(x, inverse(x)) == identity(rs));
    CHECK(inverse(x).length() == x.length());
    for (int i = 0; i < 3; ++i) {
      CHECK(mul_simple_right(x, i) == multiply(x, from_word(rs, {i + 1})));
      CHECK(mul_simple_left(i, x) == multiply(from_word(rs, {i + 1}), x));
    }
  }
}

TEST_CASE("reflection elements are involutions of odd length moving beta to -beta") {
  for (const char* name : {"B3", "G2", "D4"}) {
    RootSystem rs = build_root_system(CartanType::make(name[0], name[1] - '0'));
    CAPTURE(name);
    for (const Root& beta : rs.positive) {
      WeylElement t = reflection_element(rs, beta);
      CHECK(multiply(t, t) == identity(rs));
      CHECK(t.length() % 2 == 1);
      CHECK(t.apply(beta) == beta.negated());
    }
    CHECK(all_reflections(rs).size() == rs.num_positive());
  }
}

TEST_CASE("reflection_element rejects negative roots") {
  RootSystem rs = build_root_system(CartanType::make('A', 2));
  CHECK_THROWS_AS(reflection_element(rs, Root::from_coords({-1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(reflection_element(rs, Root::from_coords({2, 2})),
                  std::invalid_argument);
}

TEST_CASE("B2: s2 s1 s2 is the reflection in alpha_1 + 2 alpha_2") {
  RootSystem rs = build_root_system(CartanType::make('B', 2));
  CHECK(from_word(rs, {2, 1, 2}) == reflection_element(rs, Root::from_coords({1, 2})));
  CHECK(from_word(rs, {1, 2, 1}) == reflection_element(rs, Root::from_coords({1, 1})));
}

TEST_CASE("canonical reduced words") {
  RootSystem rs = build_root_system(CartanType::make('A', 3));
  CHECK(reduced_word(identity(rs)).empty());
  CHECK(reduced_word(from_word(rs, {2})) == std::vector<int>{2});
  // the canonical word peels the smallest right descent first
  CHECK(reduced_word(from_word(rs, {2, 1})) == std::vector<int>{2, 1});
  CHECK(reduced_word(from_word(rs, {1, 2})) == std::vector<int>{1, 2});

  RootSystem b3 = build_root_system(CartanType::make('B', 3));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> word(25);
    for (int& x : word) x = letter(rng);
    WeylElement w = from_word(b3, word);
    std::vector<int> rw = reduced_word(w);
    CHECK(int(rw.size()) == w.length());
    CHECK(from_word(b3, rw) == w);
  }
}

TEST_CASE("longest element") {
  struct Row {
    const char* name;
    int length;
  };
  for (const Row& row : {Row{"A3", 6}, Row{"B3", 9}, Row{"C3", 9}, Row{"D4", 12},
                         Row{"G2", 6}, Row{"F4", 24}}) {
    RootSystem rs = build_root_system(CartanType::make(row.name[0], row.name[1] - '0'));
    CAPTURE(row.name);
    WeylElement w0 = longest_element(rs);
    CHECK(w0.length() == row.length);
    CHECK(multiply(w0, w0) == identity(rs));
    for (int i = 0; i < rs.rank(); ++i) CHECK(w0.right_descent(i));
    for (const Root& beta : rs.positive) CHECK(sign_of(w0.apply(beta)) == Sign::Negative);
  }
}

TEST_CASE("group orders: product formula vs generated closure") {
  const std::map<std::string, uint64_t> orders = {
      {"A2", 6},   {"B2", 8},    {"A3", 24},     {"B3", 48},    {"C3", 48},
      {"D4", 192}, {"G2", 12},   {"F4", 1152},   {"A4", 120},   {"D5", 1920},
      {"E6", 51840}, {"E7", 2903040}, {"E8", 696729600},
  };
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    CHECK(weyl_order(CartanType::make(name[0], name[1] - '0')) == order);
  }
  for (const char* name : {"A2", "B2", "A3", "B3", "C3", "G2", "D4", "F4"}) {
    RootSystem rs = build_root_system(CartanType::make(name[0], name[1] - '0'));
    CAPTURE(name);
    std::vector<WeylElement> group = generate_group(rs);
    CHECK(group.size() == weyl_order(rs.type));
    std::set<std::vector<int>> words;
    for (const WeylElement& w : group) words.insert(reduced_word(w));
    CHECK(words.size() == group.size());  // distinct elements, distinct words
  }
}

TEST_CASE("generate_group honors its size budget") {
  RootSystem rs = build_root_system(CartanType::make('F', 4));
  CHECK_THROWS_AS(generate_group(rs, 100), ResourceError);
}

TEST_CASE("hash agrees with equality") {
  RootSystem rs = build_root_system(CartanType::make('B', 2));
  WeylHash h;
  WeylElement a = from_word(rs, {1, 2, 1});
  WeylElement b = from_word(rs, {2, 2, 1, 1, 1, 2, 1});  // same element, unreduced
  CHECK(a == b);
  CHECK(h(a) == h(b));
}
