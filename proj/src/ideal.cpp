#include "sqfdepth/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <numeric>

namespace sqfdepth {

int default_enum_cap() {
  if (const char* env = std::getenv("ENUM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 30) return static_cast<int>(v);
  }
  return 24;
}

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("ground size must lie in [0, 64], got " + std::to_string(n));
}

Mask ground_mask(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

void check_enum(int n, int cap) {
  if (n > cap)
    throw ResourceError("ground size " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap));
}

} // namespace

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(int ground_size, Mask bits) : ground_(ground_size), bits_(bits) {
  check_ground(ground_size);
  if ((bits & ~ground_mask(ground_size)) != 0)
    throw std::invalid_argument("VarSet member outside [1, " + std::to_string(ground_size) + "]");
}

VarSet VarSet::of(int ground_size, std::initializer_list<int> indices) {
  return of(ground_size, std::span<const int>(indices.begin(), indices.size()));
}

VarSet VarSet::of(int ground_size, std::span<const int> indices) {
  check_ground(ground_size);
  Mask bits = 0;
  for (int i : indices) {
    if (i < 1 || i > ground_size)
      throw std::invalid_argument("variable index " + std::to_string(i) + " outside [1, " +
                                  std::to_string(ground_size) + "]");
    bits |= Mask{1} << (i - 1);
  }
  return VarSet(ground_size, bits);
}

VarSet VarSet::full(int ground_size) {
  check_ground(ground_size);
  return VarSet(ground_size, ground_mask(ground_size));
}

int VarSet::size() const { return std::popcount(bits_); }

VarSet VarSet::unite(const VarSet& other) const {
  if (other.ground_ != ground_) throw std::invalid_argument("VarSet ground sizes differ");
  return VarSet(ground_, bits_ | other.bits_);
}

std::vector<int> VarSet::members() const {
  std::vector<int> out;
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string VarSet::to_string() const {
  std::string s = "[";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
  if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Lexicographic on sorted member lists: smaller lowest differing index first.
  Mask diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  Mask low = diff & (~diff + 1);
  return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ------------------------------------------------------- SquarefreeIdeal

SquarefreeIdeal SquarefreeIdeal::zero(int ground_size) {
  check_ground(ground_size);
  return SquarefreeIdeal(ground_size, {});
}

SquarefreeIdeal SquarefreeIdeal::unit(int ground_size) {
  check_ground(ground_size);
  return SquarefreeIdeal(ground_size, {VarSet::empty(ground_size)});
}

bool SquarefreeIdeal::contains(Mask u) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [u](const VarSet& g) { return (g.bits() & ~u) == 0; });
}

bool SquarefreeIdeal::contains(const VarSet& u) const {
  if (u.ground_size() != ground_) throw std::invalid_argument("contains: ground sizes differ");
  return contains(u.bits());
}

bool contains(const SquarefreeIdeal& ideal, const VarSet& u) { return ideal.contains(u); }

SquarefreeIdeal minimalize(int ground_size, std::span<const VarSet> gens) {
  check_ground(ground_size);
  std::vector<VarSet> sorted(gens.begin(), gens.end());
  for (const VarSet& g : sorted)
    if (g.ground_size() != ground_size)
      throw std::invalid_argument("minimalize: mixed ground sizes (" + std::to_string(g.ground_size()) +
                                  " vs " + std::to_string(ground_size) + ")");
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Graded order puts every subset before its supersets.
  std::vector<VarSet> kept;
  for (const VarSet& g : sorted) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const VarSet& k) { return k.subset_of(g); });
    if (!absorbed) kept.push_back(g);
  }
  return SquarefreeIdeal(ground_size, std::move(kept));
}

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.ground_size() != b.ground_size()) throw std::invalid_argument("intersect: ground sizes differ");
  std::vector<VarSet> unions;
  unions.reserve(a.generators().size() * b.generators().size());
  for (const VarSet& g : a.generators())
    for (const VarSet& h : b.generators()) unions.push_back(g.unite(h));
  return minimalize(a.ground_size(), unions);
}

SquarefreeIdeal prime_ideal(int ground_size, std::span<const int> indices) {
  std::vector<VarSet> gens;
  for (int i : indices) gens.push_back(VarSet::of(ground_size, {i}));
  return minimalize(ground_size, gens);
}

// ------------------------------------------------------ MultipartiteSpec

MultipartiteSpec::MultipartiteSpec(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("multipartite spec needs at least one block");
  for (int b : blocks_)
    if (b < 1) throw std::invalid_argument("multipartite block sizes must be >= 1");
  total_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
  check_ground(total_);
}

std::vector<int> MultipartiteSpec::block_variables(int i) const {
  int start = std::accumulate(blocks_.begin(), blocks_.begin() + i, 0);
  std::vector<int> vars(blocks_.at(i));
  std::iota(vars.begin(), vars.end(), start + 1);
  return vars;
}

std::string MultipartiteSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(blocks_[i]);
  }
  return s;
}

namespace {

// All transversals of the given variable classes.
std::vector<VarSet> transversals(int ground, const std::vector<std::vector<int>>& classes) {
  std::vector<Mask> acc{0};
  for (const auto& cls : classes) {
    std::vector<Mask> next;
    next.reserve(acc.size() * cls.size());
    for (Mask m : acc)
      for (int v : cls) next.push_back(m | (Mask{1} << (v - 1)));
    acc = std::move(next);
  }
  std::vector<VarSet> out;
  out.reserve(acc.size());
  for (Mask m : acc) out.emplace_back(ground, m);
  return out;
}

} // namespace

SquarefreeIdeal multipartite(const MultipartiteSpec& spec) {
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < spec.parts(); ++i) classes.push_back(spec.block_variables(i));
  auto gens = transversals(spec.total(), classes);
  return minimalize(spec.total(), gens);
}

SquarefreeIdeal bipartite(int n, int m) { return multipartite(MultipartiteSpec({n, m})); }

SquarefreeIdeal maximal_ideal(int n) {
  if (n < 1) throw std::invalid_argument("maximal ideal needs n >= 1");
  return multipartite(MultipartiteSpec({n}));
}

namespace {

// V_{m,j,k} = (x_j, x_{j+m}, ..., x_{j+(k-1)m}) on the given ground set.
SquarefreeIdeal residue_prime(int ground, int m, int j, int k) {
  std::vector<int> vars;
  for (int i = 0; i < k; ++i) vars.push_back(j + i * m);
  return prime_ideal(ground, vars);
}

} // namespace

SquarefreeIdeal path_aux(int m, int t) {
  if (m < 1 || t < 1) throw std::invalid_argument("path_aux needs m >= 1 and t >= 1");
  const int ground = t + m;
  // t + m = a*m + b with 1 <= b <= m.
  const int a = (ground - 1) / m;
  const int b = ground - a * m;
  SquarefreeIdeal acc = SquarefreeIdeal::unit(ground);
  for (int j = 1; j <= m; ++j) acc = intersect(acc, residue_prime(ground, m, j, j <= b ? a + 1 : a));
  return acc;
}

SquarefreeIdeal path_aux_residue_form(int m, int t) {
  if (m < 1 || t < 1) throw std::invalid_argument("path_aux needs m >= 1 and t >= 1");
  const int ground = t + m;
  std::vector<std::vector<int>> classes(m);
  for (int i = 1; i <= ground; ++i) classes[(i - 1) % m].push_back(i);
  auto gens = transversals(ground, classes);
  return minimalize(ground, gens);
}

SquarefreeIdeal cycle_aux(int n, int d) {
  if (n < 2) throw std::invalid_argument("cycle_aux needs n >= 2");
  if (d < 1 || n % d != 0)
    throw std::invalid_argument("cycle_aux: " + std::to_string(d) + " does not divide " + std::to_string(n));
  const int r = n / d;
  SquarefreeIdeal acc = SquarefreeIdeal::unit(n);
  for (int j = 1; j <= d; ++j) acc = intersect(acc, residue_prime(n, d, j, r));
  return acc;
}

// ---------------------------------------------------------- QuotientPair

QuotientPair::QuotientPair(SquarefreeIdeal lower, SquarefreeIdeal upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.ground_size() != upper_.ground_size())
    throw std::invalid_argument("quotient pair: ground sizes differ");
  for (const VarSet& g : lower_.generators())
    if (!upper_.contains(g))
      throw std::invalid_argument("quotient pair: generator " + g.to_string() + " of I is not in J");
}

QuotientPair QuotientPair::ideal(const SquarefreeIdeal& i) {
  return QuotientPair(SquarefreeIdeal::zero(i.ground_size()), i);
}

QuotientPair QuotientPair::quotient(const SquarefreeIdeal& i) {
  return QuotientPair(i, SquarefreeIdeal::unit(i.ground_size()));
}

// ------------------------------------------------------------ enumeration

std::vector<std::uint8_t> membership_table(const SquarefreeIdeal& ideal, int cap) {
  const int n = ideal.ground_size();
  check_enum(n, cap);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> table(size, 0);
  for (const VarSet& g : ideal.generators()) table[g.bits()] = 1;
  // Upward closure, one variable at a time.
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s)
      if ((s & bit) && table[s ^ bit]) table[s] = 1;
  }
  return table;
}

std::vector<std::uint8_t> region_table(const QuotientPair& pair, int cap) {
  auto upper = membership_table(pair.upper(), cap);
  auto lower = membership_table(pair.lower(), cap);
  for (std::size_t s = 0; s < upper.size(); ++s) upper[s] = upper[s] && !lower[s];
  return upper;
}

bool region_is_convex(const QuotientPair& pair, int cap) {
  const int n = pair.ground_size();
  auto region = region_table(pair, cap);
  const std::size_t size = region.size();
  auto below = region;  // below[s]: some subset of s lies in P
  auto above = region;  // above[s]: some superset of s lies in P
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) {
        below[s] |= below[s ^ bit];
        above[s ^ bit] |= above[s];
      }
    }
  }
  for (std::size_t s = 0; s < size; ++s)
    if (!region[s] && below[s] && above[s]) return false;
  return true;
}

bool AlphaVector::is_zero() const {
  return std::all_of(counts.begin(), counts.end(), [](const ExactInt& c) { return c == 0; });
}

AlphaVector alpha_vector(const QuotientPair& pair, int cap) {
  const int n = pair.ground_size();
  auto region = region_table(pair, cap);
  std::vector<long> counts(n + 1, 0);
  for (std::size_t s = 0; s < region.size(); ++s)
    if (region[s]) ++counts[std::popcount(s)];
  AlphaVector alpha{n, {}};
  alpha.counts.reserve(n + 1);
  for (long c : counts) alpha.counts.emplace_back(c);
  return alpha;
}

} // namespace sqfdepth
