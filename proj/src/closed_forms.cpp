#include "sqfdepth/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sqfdepth/hilbert.hpp"

namespace sqfdepth {

const char* to_string(Part p) { return p == Part::ideal ? "ideal" : "quotient"; }

BipartiteParams::BipartiteParams(int n_, int m_) : n(n_), m(m_) {
  if (m < 1 || n < m)
    throw std::invalid_argument("bipartite parameters need n >= m >= 1, got (" + std::to_string(n) + "," +
                                std::to_string(m) + ")");
}

bool BoundReport::consistent() const {
  if (lower && upper && *lower > *upper) return false;
  if (exact && !admits(*exact)) return false;
  return true;
}

bool BoundReport::admits(long v) const {
  return (!lower || *lower <= v) && (!upper || v <= *upper);
}

namespace {

long ceil_half(long x) { return (x + 1) / 2; }

void check_rank(int k, int total) {
  if (k < 0 || k > total)
    throw std::invalid_argument("rank " + std::to_string(k) + " outside [0, " + std::to_string(total) + "]");
}

void check_beta_index(int d, int k, int total) {
  if (k < 0 || k > d || d > total)
    throw std::invalid_argument("beta index needs 0 <= k <= d <= N, got k=" + std::to_string(k) +
                                " d=" + std::to_string(d) + " N=" + std::to_string(total));
}

ExactInt sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

// ------------------------------------------------------------ bipartite

ExactInt bipartite_alpha(const BipartiteParams& p, int k, Part which) {
  check_rank(k, p.total());
  const ExactInt delta = k == 0 ? 1 : 0;
  if (which == Part::ideal) return binom_nat(p.total(), k) - binom_nat(p.n, k) - binom_nat(p.m, k) + delta;
  return binom_nat(p.n, k) + binom_nat(p.m, k) - delta;
}

ExactInt bipartite_alpha_convolution(const BipartiteParams& p, int k) {
  check_rank(k, p.total());
  ExactInt sum = 0;
  for (int j = 1; j <= k - 1; ++j) sum += binom_nat(p.n, j) * binom_nat(p.m, k - j);
  return sum;
}

ExactInt bipartite_beta(const BipartiteParams& p, int d, int k, Part which) {
  check_beta_index(d, k, p.total());
  const ExactInt bn = binom_gen(p.n - d + k - 1, k);
  const ExactInt bm = binom_gen(p.m - d + k - 1, k);
  const ExactInt bd = binom_nat(d, k);
  if (which == Part::quotient) return bn + bm - sign_pow(k) * bd;
  return binom_gen(p.total() - d + k - 1, k) - bn - bm + sign_pow(k) * bd;
}

ExactInt bipartite_beta3_cubic(const BipartiteParams& p, int d) {
  ExactInt v = ExactInt(p.n) * p.m * (p.n + p.m - 2 * d + 2);
  return v / 2;
}

int bipartite_qdepth_quotient_upper(const BipartiteParams& p) {
  // floor((A - s)/2) with A = 2(n+m)+1 and s = sqrt(8mn+1): the largest c with
  // A - 2c >= 0 and (A - 2c)^2 >= 8mn + 1.
  const ExactInt a = 2 * ExactInt(p.total()) + 1;
  const ExactInt disc = 8 * ExactInt(p.n) * p.m + 1;
  for (int c = p.total(); c >= 0; --c) {
    ExactInt gap = a - 2 * c;
    if (gap >= 0 && gap * gap >= disc) return c;
  }
  throw std::logic_error("bipartite_qdepth_quotient_upper: no admissible value");
}

int bipartite_qdepth_quotient(const BipartiteParams& p) {
  if (p.m < 2) return qdepth_of_pair(QuotientPair::quotient(bipartite(p.n, p.m)));
  for (int d = p.total(); d >= 0; --d) {
    bool ok = true;
    for (int l = 1; 2 * l <= d && ok; ++l)
      ok = binom_gen(d - p.n, 2 * l) + binom_gen(d - p.m, 2 * l) >= binom_nat(d, 2 * l);
    if (ok) return d;
  }
  throw std::logic_error("bipartite_qdepth_quotient: empty characterization");
}

int bipartite_hdepth_ideal(const BipartiteParams& p) { return (p.total() + 2) / 2; }

BipartiteSdepthBounds bipartite_sdepth_bounds(const BipartiteParams& p) {
  BipartiteSdepthBounds out;
  const long half_n = ceil_half(p.n);
  const long half_m = ceil_half(p.m);

  BoundReport& q = out.quotient;
  q.quantity = "sdepth(S/I)";
  q.lower = std::min<long>(p.m, half_n);
  q.upper = p.m;
  if (p.n >= 2 * p.m - 1) q.exact = p.m;
  q.citation = "bipartite-quotient-sdepth-window";
  q.notes.push_back("depth(S/I) = 1");

  BoundReport& i = out.ideal;
  i.quantity = "sdepth(I)";
  i.lower = half_n + half_m;
  i.upper = std::min<long>(p.m + half_n, bipartite_hdepth_ideal(p));
  if (p.n % 2 != 0 || p.m % 2 != 0) i.exact = half_n + half_m;
  i.citation = "bipartite-ideal-sdepth-window";
  if (!i.exact) i.notes.push_back("both sides even: sdepth(I) in {n/2 + m/2, n/2 + m/2 + 1}");
  return out;
}

// ---------------------------------------------------------- multipartite

namespace {

// Calls f(|J|, sum_{i in J} n_i) for every subset J of the blocks (including
// the empty set and all blocks).
template <typename F>
void for_each_block_subset(const MultipartiteSpec& spec, F&& f) {
  const int r = spec.parts();
  const auto& b = spec.blocks();
  for (unsigned long j = 0; j < (1UL << r); ++j) {
    int card = 0;
    int weight = 0;
    for (int i = 0; i < r; ++i)
      if (j >> i & 1UL) {
        ++card;
        weight += b[i];
      }
    f(card, weight);
  }
}

ExactInt block_product(const MultipartiteSpec& spec) {
  ExactInt p = 1;
  for (int b : spec.blocks()) p *= b;
  return p;
}

} // namespace

// The J = all-blocks term is kept: it is [k = 0] for alpha and (-1)^{r+k} C(d,k)
// for beta. Dropping it breaks k = 0 and every beta row.
ExactInt multipartite_alpha(const MultipartiteSpec& spec, int k, Part which) {
  check_rank(k, spec.total());
  const int total = spec.total();
  ExactInt sum = 0;
  for_each_block_subset(spec, [&](int card, int weight) {
    if (which == Part::quotient && card == 0) return;
    ExactInt term = binom_nat(total - weight, k);
    bool negative = which == Part::ideal ? card % 2 == 1 : card % 2 == 0;
    if (negative)
      sum -= term;
    else
      sum += term;
  });
  return sum;
}

ExactInt multipartite_alpha_compositions(const MultipartiteSpec& spec, int k) {
  check_rank(k, spec.total());
  const auto& b = spec.blocks();
  const int r = spec.parts();
  // Dynamic programming over blocks: ways[s] = sum over l_1..l_i >= 1 with sum s.
  std::vector<ExactInt> ways(k + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < r; ++i) {
    std::vector<ExactInt> next(k + 1, 0);
    for (int s = 0; s <= k; ++s) {
      if (ways[s] == 0) continue;
      for (int l = 1; l <= b[i] && s + l <= k; ++l) next[s + l] += ways[s] * binom_nat(b[i], l);
    }
    ways = std::move(next);
  }
  return ways[k];
}

ExactInt multipartite_beta(const MultipartiteSpec& spec, int d, int k, Part which) {
  check_beta_index(d, k, spec.total());
  const int total = spec.total();
  ExactInt sum = 0;
  for_each_block_subset(spec, [&](int card, int weight) {
    if (which == Part::quotient && card == 0) return;
    ExactInt term = binom_gen(total - weight - d + k - 1, k);
    bool negative = which == Part::ideal ? card % 2 == 1 : card % 2 == 0;
    if (negative)
      sum -= term;
    else
      sum += term;
  });
  return sum;
}

ExactInt multipartite_beta_r_quotient(const MultipartiteSpec& spec, int d) {
  const int r = spec.parts();
  if (d < r || d > spec.total())
    throw std::invalid_argument("beta^d_r needs r <= d <= N");
  return binom_nat(spec.total() - d + r - 1, r) - block_product(spec);
}

namespace {

long sum_ceil_halves(const MultipartiteSpec& spec) {
  long s = 0;
  for (int b : spec.blocks()) s += ceil_half(b);
  return s;
}

long min_ceil_half(const MultipartiteSpec& spec) {
  long m = ceil_half(spec.blocks().front());
  for (int b : spec.blocks()) m = std::min(m, ceil_half(b));
  return m;
}

int min_block(const MultipartiteSpec& spec) {
  return *std::min_element(spec.blocks().begin(), spec.blocks().end());
}

} // namespace

std::optional<int> multipartite_qdepth_characterized(const MultipartiteSpec& spec, Part which) {
  const int r = spec.parts();
  long lo = 0;
  long hi = 0;
  if (which == Part::ideal) {
    lo = sum_ceil_halves(spec);
    hi = (spec.total() + r) / 2;
  } else {
    lo = sum_ceil_halves(spec) - min_ceil_half(spec);
    hi = spec.total() - min_block(spec);
  }
  for (long d = hi; d >= lo; --d) {
    bool ok = true;
    for (long k = r; k <= d && ok; ++k) ok = multipartite_beta(spec, static_cast<int>(d), static_cast<int>(k), which) >= 0;
    if (ok) return static_cast<int>(d);
  }
  return std::nullopt;
}

bool at_most_one_even_block(const MultipartiteSpec& spec) {
  return std::count_if(spec.blocks().begin(), spec.blocks().end(), [](int b) { return b % 2 == 0; }) <= 1;
}

BoundReport multipartite_ideal_bounds(const MultipartiteSpec& spec) {
  BoundReport rep;
  rep.quantity = "qdepth(I)";
  rep.lower = sum_ceil_halves(spec);
  rep.upper = (spec.total() + spec.parts()) / 2;
  rep.citation = "multipartite-ideal-window";
  if (spec.parts() == 2 || at_most_one_even_block(spec) || *rep.lower == *rep.upper) {
    rep.exact = rep.upper;
  } else {
    rep.notes.push_back("conjectured qdepth(I) = " + std::to_string(*rep.upper));
  }
  rep.notes.push_back("sdepth(I) >= " + std::to_string(*rep.lower));
  return rep;
}

BoundReport multipartite_quotient_bounds(const MultipartiteSpec& spec) {
  BoundReport rep;
  rep.quantity = "qdepth(S/I)";
  rep.lower = sum_ceil_halves(spec) - min_ceil_half(spec);
  rep.upper = spec.total() - min_block(spec);
  if (*rep.lower == *rep.upper) rep.exact = rep.lower;
  rep.citation = "multipartite-quotient-window";
  rep.notes.push_back("claimed sdepth(S/I) >= " + std::to_string(*rep.lower) +
                      "; false in general, e.g. blocks (1,1,3) and (2,5)");
  rep.notes.push_back("qdepth(S/I) >= depth(S/I) = " + std::to_string(spec.parts() - 1));
  return rep;
}

int quotient_upper_bound_binomial(const MultipartiteSpec& spec) {
  const int r = spec.parts();
  const ExactInt prod = block_product(spec);
  for (int d = r; d <= spec.total(); ++d)
    if (binom_nat(spec.total() - d + r - 1, r) < prod) return d - 1;
  throw std::logic_error("quotient_upper_bound_binomial: no d <= N qualifies");
}

ExactInt integer_root_ceil(const ExactInt& v, unsigned long r) {
  if (r == 0) throw std::invalid_argument("integer_root_ceil: r must be positive");
  if (v <= 0) return 0;
  ExactInt c;
  mpz_root(c.get_mpz_t(), v.get_mpz_t(), r);  // floor of the real root
  ExactInt power;
  mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), r);
  if (power < v) c += 1;
  return c;
}

namespace {

ExactInt factorial(int r) {
  ExactInt f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

} // namespace

int quotient_safe_range(const MultipartiteSpec& spec) {
  const int r = spec.parts();
  ExactInt root = integer_root_ceil(factorial(r) * block_product(spec), static_cast<unsigned long>(r));
  return spec.total() - static_cast<int>(root.get_si());
}

int means_safe_range(const MultipartiteSpec& spec) {
  // d <= N (1 - (r!/r^r)^(1/r))  <=>  ((N - d) r)^r >= r! N^r  for d <= N.
  const int r = spec.parts();
  const int total = spec.total();
  const unsigned long ur = static_cast<unsigned long>(r);
  ExactInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(total), ur);
  rhs *= factorial(r);
  for (int d = total; d >= 0; --d) {
    ExactInt lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>((total - d) * r), ur);
    if (lhs >= rhs) return d;
  }
  return -1;
}

// -------------------------------------------------- path and cycle powers

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

void check_path_params(int n, int m, int t) {
  if (m < 1 || n < m || t < 1)
    throw std::invalid_argument("path power parameters need n >= m >= 1 and t >= 1");
}

void check_cycle_params(int n, int m) {
  if (m < 2 || n <= m) throw std::invalid_argument("cycle power parameters need n > m >= 2");
}

} // namespace

int depth_phi(int n, int m, int t) {
  check_path_params(n, m, t);
  if (t > n + 1 - m) return m - 1;
  const long x = n - t + 2;
  return static_cast<int>(x - floor_div(x, m + 1) - ceil_div(x, m + 1));
}

int path_power_sdepth_upper(int n, int m, int t) {
  check_path_params(n, m, t);
  const long t0 = std::min(t, n - m);
  const long first = n - ceil_div(t0, 2);
  const long second = n - floor_div(n - t0 + 1, m + 1) + 1;
  return static_cast<int>(std::min(first, second));
}

int path_aux_upper(int m, int t) {
  if (m < 1 || t < 1) throw std::invalid_argument("path_aux_upper needs m, t >= 1");
  return m + t / 2;
}

std::optional<int> cycle_t0(int n, int m) {
  check_cycle_params(n, m);
  const long d = std::gcd(n, m);
  for (long t0 = n - 1; t0 >= 1; --t0) {
    long rest = static_cast<long>(m) * t0 - d;
    if (rest >= n && rest % n == 0) return static_cast<int>(t0);
  }
  return std::nullopt;
}

int cycle_power_sdepth_upper(int n, int m) {
  check_cycle_params(n, m);
  return (n + std::gcd(n, m)) / 2;
}

BoundReport path_power_report(int n, int m, int t) {
  BoundReport rep;
  rep.quantity = "sdepth(I_{n,m}^t)";
  rep.upper = path_power_sdepth_upper(n, m, t);
  rep.citation = "path-power-sdepth-upper";
  rep.notes.push_back("t0 = " + std::to_string(std::min(t, n - m)));
  rep.notes.push_back("sdepth(S/I_{n,m}^t) >= depth(S/I_{n,m}^t) = " + std::to_string(depth_phi(n, m, t)));
  return rep;
}

BoundReport cycle_power_report(int n, int m) {
  BoundReport rep;
  rep.quantity = "sdepth(J_{n,m}^t)";
  rep.upper = cycle_power_sdepth_upper(n, m);
  rep.citation = "cycle-power-sdepth-upper";
  const int d = std::gcd(n, m);
  auto t0 = cycle_t0(n, m);
  rep.notes.push_back("gcd(n,m) = " + std::to_string(d));
  rep.notes.push_back(t0 ? "valid for t >= t0 = " + std::to_string(*t0) : "valid for t >= t0; no t0 exists");
  rep.notes.push_back("warning: an alternative statement of this bound reads floor((n+d)/2) - 1 for t >= n-1; "
                      "the value here is floor((n+d)/2)");
  return rep;
}

} // namespace sqfdepth
