#include "schubert/rootsys.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

namespace detail {
[[noreturn]] void invariant_failure(const char* expr, const char* file, int line,
                                    const std::string& msg) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "internal invariant failure: %s (%s) at %s:%d", msg.c_str(),
                expr, file, line);
  throw std::logic_error(buf);
}
}  // namespace detail

bool CartanType::admissible(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1 && rank <= kMaxRank;
    case 'B': return rank >= 2 && rank <= kMaxRank;
    case 'C': return rank >= 2 && rank <= kMaxRank;
    case 'D': return rank >= 3 && rank <= kMaxRank;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

CartanType CartanType::make(char letter, int rank) {
  if (!admissible(letter, rank)) {
    throw std::invalid_argument("inadmissible Cartan type " + std::string(1, letter) +
                                std::to_string(rank));
  }
  return CartanType{letter, rank};
}

std::string CartanType::name() const { return std::string(1, letter) + std::to_string(rank); }

Root Root::simple(int rank, int i) {
  Root r;
  r.rank = int8_t(rank);
  r.c[i] = 1;
  return r;
}

Root Root::from_coords(const std::vector<int>& coords) {
  if (coords.empty() || coords.size() > kMaxRank)
    throw std::invalid_argument("root coordinate vector has bad length");
  Root r;
  r.rank = int8_t(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < -6 || coords[i] > 6)
      throw std::invalid_argument("root coordinate out of range");
    r.c[i] = int8_t(coords[i]);
  }
  return r;
}

Root Root::negated() const {
  Root r = *this;
  for (int i = 0; i < rank; ++i) r.c[i] = int8_t(-c[i]);
  return r;
}

std::vector<int> Root::coords() const {
  std::vector<int> v(rank);
  for (int i = 0; i < rank; ++i) v[i] = c[i];
  return v;
}

bool Root::operator<(const Root& o) const {
  int ha = height(), hb = o.height();
  if (ha != hb) return ha < hb;
  return c < o.c;
}

Sign sign_of(const Root& r) {
  bool has_pos = false, has_neg = false;
  for (int i = 0; i < r.rank; ++i) {
    if (r.c[i] > 0) has_pos = true;
    if (r.c[i] < 0) has_neg = true;
  }
  if (has_pos && !has_neg) return Sign::Positive;
  if (has_neg && !has_pos) return Sign::Negative;
  throw std::invalid_argument("vector is not a root: mixed or zero signs");
}

namespace {

void fill_cartan(CartanType ct, std::array<std::array<int8_t, kMaxRank>, kMaxRank>& a) {
  const int n = ct.rank;
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int aij, int aji) {
    // a[i][j] = <alpha_j, alpha_i^vee>
    a[i][j] = int8_t(aij);
    a[j][i] = int8_t(aji);
  };
  switch (ct.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
      bond(0, 2, -1, -1);
      bond(2, 3, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      bond(0, 1, -3, -1);
      break;
    default:
      throw std::invalid_argument("unknown letter");
  }
}

// Solve d_i * a[i][j] = d_j * a[j][i] along the (connected) Dynkin graph,
// then scale to the smallest positive integers.
std::array<int64_t, kMaxRank> make_symmetrizer(
    int n, const std::array<std::array<int8_t, kMaxRank>, kMaxRank>& a) {
  std::vector<Rat> d(n, Rat(0));
  d[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      todo.push_back(j);
    }
  }
  BigInt mult = 1;
  for (int i = 0; i < n; ++i) {
    SCHUBERT_CHECK(d[i] > 0, "symmetrizer entry not positive (graph disconnected?)");
    mult = boost::multiprecision::lcm(mult, denominator(d[i]));
  }
  BigInt g = 0;
  std::vector<BigInt> scaled(n);
  for (int i = 0; i < n; ++i) {
    scaled[i] = numerator(Rat(d[i] * mult));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::array<int64_t, kMaxRank> out{};
  for (int i = 0; i < n; ++i) out[i] = int64_t(scaled[i] / g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      SCHUBERT_CHECK(out[i] * a[i][j] == out[j] * a[j][i],
                     "symmetrizer does not symmetrize the Cartan matrix");
  return out;
}

// simple reflection on coordinates: only entry i changes
Root apply_simple(const std::array<std::array<int8_t, kMaxRank>, kMaxRank>& a, int i,
                  const Root& v) {
  int pair = 0;
  for (int j = 0; j < v.rank; ++j) pair += a[i][j] * v.c[j];
  Root out = v;
  int nc = v.c[i] - pair;
  SCHUBERT_CHECK(nc >= -6 && nc <= 6, "root coordinate escaped the expected range");
  out.c[i] = int8_t(nc);
  return out;
}

}  // namespace

RootSystem build_root_system(CartanType ct) {
  ct = CartanType::make(ct.letter, ct.rank);  // validate
  RootSystem rs;
  rs.type = ct;
  fill_cartan(ct, rs.cartan);
  rs.sym = make_symmetrizer(ct.rank, rs.cartan);

  // close the simple roots under all simple reflections
  std::set<Root> seen;
  std::vector<Root> queue;
  for (int i = 0; i < ct.rank; ++i) {
    Root r = Root::simple(ct.rank, i);
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int i = 0; i < ct.rank; ++i) {
      Root img = apply_simple(rs.cartan, i, r);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }

  for (const Root& r : seen) {
    if (sign_of(r) == Sign::Positive) rs.positive.push_back(r);  // sign_of throws if mixed
  }
  std::sort(rs.positive.begin(), rs.positive.end());
  SCHUBERT_CHECK(seen.size() == 2 * rs.positive.size(), "root set not symmetric under negation");

  rs.all = rs.positive;
  rs.all.reserve(seen.size());
  for (const Root& r : rs.positive) rs.all.push_back(r.negated());
  for (const Root& r : rs.all) SCHUBERT_CHECK(seen.count(r) == 1, "negation left the root set");

  std::vector<CoordArray> pos_coords;
  pos_coords.reserve(rs.positive.size());
  for (const Root& r : rs.positive) pos_coords.push_back(r.c);
  rs.packed_positive = kernels::pack_roots(ct.rank, pos_coords);
  return rs;
}

int RootSystem::positive_index_of(const Root& r) const {
  auto it = std::lower_bound(positive.begin(), positive.end(), r);
  if (it != positive.end() && *it == r) return int(it - positive.begin());
  return -1;
}

int RootSystem::index_of(const Root& r) const {
  if (r.rank != type.rank) return -1;
  int idx = positive_index_of(r);
  if (idx >= 0) return idx;
  idx = positive_index_of(r.negated());
  if (idx >= 0) return int(positive.size()) + idx;
  return -1;
}

namespace {
// invariant symmetric form (x, y) = sum_ij x_i sym_i cartan[i][j] y_j
int64_t bilinear(const RootSystem& rs, const Root& x, const Root& y) {
  int64_t s = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (x.c[i] == 0) continue;
    int64_t row = 0;
    for (int j = 0; j < rs.rank(); ++j) row += int64_t(rs.cartan[i][j]) * y.c[j];
    s += int64_t(x.c[i]) * rs.sym[i] * row;
  }
  return s;
}
}  // namespace

Rat pairing(const RootSystem& rs, const Root& v, const Root& beta) {
  if (!rs.is_root(beta)) throw std::invalid_argument("pairing: beta is not a root here");
  int64_t norm = bilinear(rs, beta, beta);
  SCHUBERT_CHECK(norm > 0, "root has nonpositive norm under the invariant form");
  return Rat(2 * bilinear(rs, v, beta), norm);
}

int64_t pairing_int(const RootSystem& rs, const Root& v, const Root& beta) {
  Rat p = pairing(rs, v, beta);
  SCHUBERT_CHECK(is_integral(p), "coroot pairing of two roots must be integral");
  return int64_t(numerator(p));
}

Root reflect_root(const RootSystem& rs, const Root& v, const Root& beta) {
  int64_t p = pairing_int(rs, v, beta);
  Root out = v;
  for (int i = 0; i < rs.rank(); ++i) {
    int64_t nc = int64_t(v.c[i]) - p * beta.c[i];
    SCHUBERT_CHECK(nc >= -6 && nc <= 6, "reflection left the root coordinate range");
    out.c[i] = int8_t(nc);
  }
  SCHUBERT_CHECK(rs.is_root(out), "reflection image is not a root");
  return out;
}

}  // namespace schubert
