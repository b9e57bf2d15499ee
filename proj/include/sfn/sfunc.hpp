#ifndef SFN_SFUNC_HPP
#define SFN_SFUNC_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "sfn/arith.hpp"
#include "sfn/error.hpp"
#include "sfn/mseries.hpp"
#include "sfn/numfield.hpp"
#include "sfn/padic.hpp"
#include "sfn/series.hpp"

namespace sfn {

/// One congruence or integrality test at (index, p).
///
/// `required` is the p-adic precision the congruence must reach; `valuation`
/// is what was achieved, capped at `required` for passing checks. Integrality
/// failures are recorded with required = 0 and a negative valuation.
struct Check {
  Exponent index;  // one entry for univariate series
  std::uint64_t p = 0;
  long required = 0;
  long valuation = 0;
  bool pass = true;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Valuation of an element at a bad prime, reported but never failed.
struct BadPrimeNote {
  Exponent index;
  std::uint64_t p = 0;
  long valuation = 0;
};

struct SReport {
  int s = 0;
  int order = 0;
  bool multivariate = false;
  std::vector<Check> checks;
  bool pass = true;
  std::vector<Integer> skipped_primes;
  std::vector<BadPrimeNote> bad_prime_notes;

  std::vector<Check> violations() const {
    std::vector<Check> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c);
    return out;
  }
};

struct CheckOptions {
  unsigned jobs = 0;          // 0: std::thread::hardware_concurrency()
  bool primes_extra = false;  // also record valuations at bad primes
};

namespace detail {

/// Frobenius lifts keyed by (p, precision), built on demand.
class FrobeniusCache {
 public:
  explicit FrobeniusCache(NumberField field) : field_(std::move(field)) {}

  std::shared_ptr<const FrobeniusMap> get(std::uint64_t p, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(p, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto frob = std::make_shared<const FrobeniusMap>(ResidueRing::make(field_, p, n));
    cache_.emplace(key, frob);
    return frob;
  }

 private:
  NumberField field_;
  std::mutex mu_;
  std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const FrobeniusMap>> cache_;
};

inline long finite_or(const Valuation& v, long fallback) { return v.is_infinite() ? fallback : v.value(); }

/// v_p(Frob_p(u) - w), capped at `cap`. Denominators are cleared by p^t first so
/// negative valuations come out exactly.
inline long frobenius_difference_valuation(const FieldElem& u, const FieldElem& w, std::uint64_t p, long cap,
                                           FrobeniusCache& cache) {
  const Valuation vu = valuation(u, p), vw = valuation(w, p);
  long t = 0;
  if (!vu.is_infinite()) t = std::max(t, -vu.value());
  if (!vw.is_infinite()) t = std::max(t, -vw.value());
  if (vu.is_infinite() && vw.is_infinite()) return cap;
  const long prec = cap + t;
  if (prec <= 0) return cap;
  const auto frob = cache.get(p, static_cast<int>(prec));
  const Rational scale(ipow(p, static_cast<unsigned long>(t)));
  const ResidueElem diff =
      frob->apply(reduce(u * scale, frob->ring())) - reduce(w * scale, frob->ring());
  return diff.valuation() - t;
}

template <typename Task, typename Fn>
void run_parallel(std::vector<Task>& tasks, unsigned jobs, Fn fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (jobs <= 1) {
    for (auto& t : tasks) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (std::size_t i = next++; i < tasks.size(); i = next++) fn(tasks[i]);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline void sort_checks(std::vector<Check>& checks) {
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.index, a.p, a.required) < std::tie(b.index, b.p, b.required);
  });
}

inline std::vector<std::uint64_t> small_primes_up_to(int n) {
  std::vector<std::uint64_t> out;
  for (int q = 2; q <= n; ++q)
    if (is_prime(static_cast<std::uint64_t>(q))) out.push_back(static_cast<std::uint64_t>(q));
  return out;
}

}  // namespace detail

/// Normalized coefficients a_k = k^s c_k, k = 1..N (index 0 unused).
inline std::vector<FieldElem> normalized_coefficients(const Series& v, int s) {
  std::vector<FieldElem> a(static_cast<std::size_t>(v.order()) + 1, v.field().zero());
  for (int k = 1; k <= v.order(); ++k) a[k] = v[k] * Rational(ipow(static_cast<std::uint64_t>(k), s));
  return a;
}

/// Verifies Frob_p(a_{k/p}) = a_k mod p^(s ord_p k) for all k <= N and all good p.
///
/// Primes p > N enter only through integrality of the a_k, so a pass certifies
/// the truncated series at every good prime.
inline SReport check_sfunction(const Series& v, int s, const CheckOptions& opts = {}) {
  if (s < 0) fail(Errc::BadPrecision, "s must be non-negative");
  if (!v.const_term().is_zero()) fail(Errc::ConstantTermNonzero, "s-functions have no constant term");
  const NumberField& field = v.field();
  const int N = v.order();
  const auto a = normalized_coefficients(v, s);

  SReport rep;
  rep.s = s;
  rep.order = N;
  std::set<Integer> skipped;
  std::vector<Check> tasks;
  for (int k = 1; k <= N; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    for (std::uint64_t p : prime_divisors(uk)) {
      if (!field.is_good_prime(p)) continue;
      tasks.push_back(Check{{k}, p, s * ord(uk, p), 0, true});
    }
    for (const Integer& q : denominator_support(a[k])) {
      const auto p = static_cast<std::uint64_t>(q.get_ui());
      if (!q.fits_ulong_p() || !field.is_good_prime(p)) {
        skipped.insert(q);
        if (opts.primes_extra && q.fits_ulong_p())
          rep.bad_prime_notes.push_back({{k}, p, detail::finite_or(coordinate_valuation(a[k], p), 0)});
        continue;
      }
      if (uk % p == 0) continue;  // covered by the congruence at (k, p)
      rep.checks.push_back(Check{{k}, p, 0, valuation(a[k], p).value(), false});
    }
  }
  detail::FrobeniusCache cache(field);
  detail::run_parallel(tasks, opts.jobs, [&](Check& c) {
    const int k = c.index[0];
    const int kp = k / static_cast<int>(c.p);
    c.valuation = detail::frobenius_difference_valuation(a[kp], a[k], c.p, c.required, cache);
    c.pass = c.valuation >= c.required;
  });
  rep.checks.insert(rep.checks.end(), tasks.begin(), tasks.end());
  detail::sort_checks(rep.checks);
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });
  rep.skipped_primes.assign(skipped.begin(), skipped.end());
  return rep;
}

/// Multivariate form: (1/p^s) Frob_p c_{k/p} - c_k must be p-integral, where
/// c_{k/p} = 0 unless p divides every component of k.
inline SReport check_sfunction(const MSeries& w, int s, const CheckOptions& opts = {}) {
  if (s < 0) fail(Errc::BadPrecision, "s must be non-negative");
  if (!w.const_term().is_zero()) fail(Errc::ConstantTermNonzero, "s-functions have no constant term");
  const NumberField& field = w.field();
  const int T = w.order();

  std::set<Exponent> candidates;
  const auto primes = detail::small_primes_up_to(T);
  for (const auto& [e, c] : w.terms()) {
    candidates.insert(e);
    const int deg = total_degree(e);
    for (std::uint64_t p : primes) {
      if (static_cast<int>(p) * deg > T) break;
      Exponent m = e;
      for (auto& x : m) x *= static_cast<int>(p);
      candidates.insert(m);
    }
  }

  SReport rep;
  rep.s = s;
  rep.order = T;
  rep.multivariate = true;
  std::set<Integer> skipped;
  std::vector<Check> tasks;
  for (const auto& k : candidates) {
    int g = 0;
    for (int x : k) g = std::gcd(g, x);
    const auto ug = static_cast<std::uint64_t>(g);
    for (std::uint64_t p : prime_divisors(ug)) {
      if (!field.is_good_prime(p)) continue;
      tasks.push_back(Check{k, p, s, 0, true});
    }
    const FieldElem ck = w.coeff(k);
    for (const Integer& q : denominator_support(ck)) {
      const auto p = static_cast<std::uint64_t>(q.get_ui());
      if (!q.fits_ulong_p() || !field.is_good_prime(p)) {
        skipped.insert(q);
        if (opts.primes_extra && q.fits_ulong_p())
          rep.bad_prime_notes.push_back({k, p, detail::finite_or(coordinate_valuation(ck, p), 0)});
        continue;
      }
      if (ug % p == 0) continue;
      rep.checks.push_back(Check{k, p, 0, valuation(ck, p).value(), false});
    }
  }
  detail::FrobeniusCache cache(field);
  detail::run_parallel(tasks, opts.jobs, [&](Check& c) {
    Exponent kp = c.index;
    for (auto& x : kp) x /= static_cast<int>(c.p);
    const FieldElem u = w.coeff(kp);
    const FieldElem pw = w.coeff(c.index) * Rational(ipow(c.p, static_cast<unsigned long>(s)));
    c.valuation = detail::frobenius_difference_valuation(u, pw, c.p, s, cache);
    c.pass = c.valuation >= c.required;
  });
  rep.checks.insert(rep.checks.end(), tasks.begin(), tasks.end());
  detail::sort_checks(rep.checks);
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return c.pass; });
  rep.skipped_primes.assign(skipped.begin(), skipped.end());
  return rep;
}

/// b_d with V = -sum_d log(1 - b_d z^d), from c_d = sum_{k|d} b_{d/k}^k / k.
/// Integrality is not enforced.
inline std::vector<FieldElem> dwork_factor(const Series& v) {
  if (!v.const_term().is_zero()) fail(Errc::ConstantTermNonzero, "series must have zero constant term");
  const int N = v.order();
  std::vector<FieldElem> b(static_cast<std::size_t>(N), v.field().zero());
  for (int d = 1; d <= N; ++d) {
    FieldElem bd = v[d];
    for (int k = 2; k <= d; ++k) {
      if (d % k != 0) continue;
      const FieldElem& base = b[static_cast<std::size_t>(d / k - 1)];
      if (base.is_zero()) continue;
      bd -= base.pow(static_cast<unsigned long>(k)) / Rational(k);
    }
    b[static_cast<std::size_t>(d - 1)] = std::move(bd);
  }
  return b;
}

/// -sum_d log(1 - b_d z^d) truncated at z^N; b[d-1] = b_d.
inline Series dwork_assemble(const std::vector<FieldElem>& b, const NumberField& field, int order) {
  Series v(field, order);
  std::vector<FieldElem> acc(static_cast<std::size_t>(order) + 1, field.zero());
  for (std::size_t i = 0; i < b.size() && static_cast<int>(i) < order; ++i) {
    const int d = static_cast<int>(i) + 1;
    if (b[i].is_zero()) continue;
    FieldElem pw = b[i];
    for (int k = 1; k * d <= order; ++k) {
      acc[static_cast<std::size_t>(k * d)] += pw / Rational(k);
      if ((k + 1) * d <= order) pw = pw * b[i];
    }
  }
  for (int k = 1; k <= order; ++k) v.set(k, std::move(acc[k]));
  return v;
}

/// An s-function with a_1 = x built from Frobenius lifts and the CRT.
///
/// For gcd(k, disc) = 1, a_k solves a_k = Frob_p(a_{k/p}) mod p^(s ord_p k) for
/// all p | k. Among the solutions, a_k - a_{k/q} (q the least prime factor of k)
/// has coordinates in [0, M), M the product of the moduli; a_k = 0 otherwise.
inline Series generate_crt(const NumberField& field, const FieldElem& x, int s, int order) {
  if (!(x.field() == field)) fail(Errc::FieldMismatch, "x is not in the given field");
  if (!denominator_support(x).empty()) fail(Errc::NotIntegral, "x must be integral");
  if (s < 1) fail(Errc::BadPrecision, "s must be positive");
  const int d = field.degree();
  std::vector<FieldElem> a(static_cast<std::size_t>(order) + 1, field.zero());
  if (order >= 1) a[1] = x;
  detail::FrobeniusCache cache(field);
  for (int k = 2; k <= order; ++k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const auto primes = prime_divisors(uk);
    bool coprime = true;
    for (auto p : primes)
      if (!field.is_good_prime(p)) coprime = false;
    if (!coprime) continue;
    Integer M = 1;
    std::vector<Integer> sol(static_cast<std::size_t>(d), Integer(0));
    for (auto p : primes) {
      const int e = s * static_cast<int>(ord(uk, p));
      const auto frob = cache.get(p, e);
      const ResidueElem t = frob->apply(reduce(a[static_cast<std::size_t>(k / static_cast<int>(p))], frob->ring()));
      const Integer& m = frob->ring().modulus();
      // combine sol (mod M) with t (mod m)
      const Integer inv = inverse_mod(M, m);
      for (int i = 0; i < d; ++i) {
        Integer lift = mod_floor((t[i] - sol[i]) * inv, m);
        sol[i] += M * lift;
      }
      M *= m;
    }
    const FieldElem& ref = a[static_cast<std::size_t>(k / static_cast<int>(primes.front()))];
    std::vector<Rational> coords(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      const Integer r = ref[i].get_num();
      coords[i] = Rational(r + mod_floor(sol[i] - r, M));
    }
    a[k] = FieldElem(field, std::move(coords));
  }
  Series v(field, order);
  for (int k = 1; k <= order; ++k) v.set(k, a[k] / Rational(ipow(static_cast<std::uint64_t>(k), s)));
  return v;
}

}  // namespace sfn

#endif  // SFN_SFUNC_HPP
