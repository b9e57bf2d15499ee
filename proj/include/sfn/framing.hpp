#ifndef SFN_FRAMING_HPP
#define SFN_FRAMING_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sfn/error.hpp"
#include "sfn/mseries.hpp"
#include "sfn/series.hpp"

namespace sfn {

/// Symmetric integer framing matrix.
class Kappa {
 public:
  Kappa() = default;
  explicit Kappa(std::vector<std::vector<long>> rows) : m_(std::move(rows)) {
    for (const auto& r : m_)
      if (r.size() != m_.size()) fail(Errc::DimensionMismatch, "kappa must be square");
    for (std::size_t i = 0; i < m_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (m_[i][j] != m_[j][i]) fail(Errc::NotSymmetric, "kappa must be symmetric");
  }

  static Kappa zero(int n) { return Kappa(std::vector<std::vector<long>>(n, std::vector<long>(n, 0))); }

  /// Parses "r1;r2;..." with comma-separated integer entries, e.g. "1,0;0,1".
  static Kappa parse(const std::string& text) {
    std::vector<std::vector<long>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
      std::vector<long> r;
      std::stringstream es(row);
      std::string entry;
      while (std::getline(es, entry, ',')) {
        try {
          std::size_t used = 0;
          long v = std::stol(entry, &used);
          while (used < entry.size() && entry[used] == ' ') ++used;
          if (used != entry.size()) throw std::invalid_argument(entry);
          r.push_back(v);
        } catch (const std::exception&) {
          fail(Errc::Parse, "bad kappa entry '" + entry + "'");
        }
      }
      rows.push_back(std::move(r));
    }
    if (rows.empty()) fail(Errc::Parse, "empty kappa");
    return Kappa(std::move(rows));
  }

  int n() const noexcept { return static_cast<int>(m_.size()); }
  long operator()(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// sigma_i = (-1)^kappa_ii
  int sign(int i) const { return ((*this)(i, i) % 2 == 0) ? 1 : -1; }

  friend Kappa operator+(const Kappa& a, const Kappa& b) {
    if (a.n() != b.n()) fail(Errc::DimensionMismatch, "kappa sizes differ");
    auto rows = a.m_;
    for (int i = 0; i < a.n(); ++i)
      for (int j = 0; j < a.n(); ++j) rows[i][j] += b(i, j);
    return Kappa(std::move(rows));
  }
  friend bool operator==(const Kappa&, const Kappa&) = default;

 private:
  std::vector<std::vector<long>> m_;
};

namespace detail {

inline void require_no_constant(const Series& w) {
  if (!w.const_term().is_zero()) fail(Errc::ConstantTermNonzero, "framing needs zero constant term");
}

}  // namespace detail

/// Elementary framing from the constant-term formula:
/// a~_k = (-1)^(k-1) [z^k] Y^(-k), Y = exp(-delta W); returns sum a~_k z~^k / k^2.
inline Series frame_elementary(const Series& w) {
  detail::require_no_constant(w);
  const Series y = exp_series(-delta(w));
  Series out(w.field(), w.order());
  for (int k = 1; k <= w.order(); ++k) {
    FieldElem a = power_coefficient(y, -k, k);
    if (k % 2 == 0) a = -a;
    out.set(k, a / Rational(static_cast<long>(k) * k));
  }
  return out;
}

/// Elementary framing by explicit reversion: z~ = -z Y, z = -z~ Y~,
/// W~ = -dint(log Y~).
inline Series frame_elementary_by_reversion(const Series& w) {
  detail::require_no_constant(w);
  const int n = w.order();
  const Series y = exp_series(-delta(w));
  // z~ = -z Y is known to order n+1 since Y is known to order n
  Series zt(w.field(), n + 1);
  for (int k = 0; k <= n; ++k) zt.set(k + 1, -y[k]);
  const Series z_of_zt = revert(zt);
  Series yt(w.field(), n);
  for (int k = 0; k <= n; ++k) yt.set(k, -z_of_zt[k + 1]);
  return -dint(log_series(yt));
}

/// Framing with integer parameter f: z_f = z (-Y)^f, W_f = W - (f/2)(delta W)^2
/// re-expanded in z_f through the reverted coordinate change.
inline Series frame_f(const Series& w, long f) {
  detail::require_no_constant(w);
  if (f == 0) return w;
  const int n = w.order();
  const Series dw = delta(w);
  const Series zf = (f % 2 == 0 ? Rational(1) : Rational(-1)) *
                    (Series::variable(w.field(), n) * exp_series(Rational(-f) * dw));
  const Series z_of_zf = revert(zf);
  const Series h = w - frac(f, 2) * (dw * dw);
  return compose(h, z_of_zf);
}

/// Cross-check for frame_f via Lagrange inversion of log(z/z_f):
/// a_k^(f) = ((-1)^(fk)/f) [z^k] Y^(-fk), returned as sum a_k^(f) z_f^k / k^2.
inline Series frame_f_constant_term(const Series& w, long f) {
  detail::require_no_constant(w);
  if (f == 0) return w;
  const Series y = exp_series(-delta(w));
  Series out(w.field(), w.order());
  for (int k = 1; k <= w.order(); ++k) {
    FieldElem a = power_coefficient(y, -f * k, k) / Rational(f);
    if ((f * k) % 2 != 0) a = -a;
    out.set(k, a / Rational(static_cast<long>(k) * k));
  }
  return out;
}

/// The coordinate change z_kappa^i = sigma_i z^i exp(-sum_k kappa_ik delta_k W).
inline std::vector<MSeries> framing_coordinates(const MSeries& w, const Kappa& kappa) {
  const int n = w.nvars();
  std::vector<MSeries> dw;
  for (int k = 0; k < n; ++k) dw.push_back(delta(w, k));
  std::vector<MSeries> out;
  for (int i = 0; i < n; ++i) {
    MSeries phi(w.field(), n, w.order());
    for (int k = 0; k < n; ++k)
      if (kappa(i, k) != 0) phi = phi - Rational(kappa(i, k)) * dw[k];
    out.push_back(Rational(kappa.sign(i)) * (MSeries::variable(w.field(), n, w.order(), i) * exp_series(phi)));
  }
  return out;
}

/// Multivariate framing: W_kappa = W - (1/2) sum_jk kappa_jk delta_j W delta_k W,
/// expressed in the z_kappa variables.
inline MSeries frame_multi(const MSeries& w, const Kappa& kappa) {
  if (kappa.n() != w.nvars()) fail(Errc::DimensionMismatch, "kappa dimension differs from nvars");
  if (!w.const_term().is_zero()) fail(Errc::ConstantTermNonzero, "framing needs zero constant term");
  const int n = w.nvars();
  bool zero = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (kappa(i, j) != 0) zero = false;
  if (zero) return w;
  std::vector<MSeries> dw;
  for (int k = 0; k < n; ++k) dw.push_back(delta(w, k));
  MSeries h = w;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (kappa(j, k) != 0) h = h - frac(kappa(j, k), 2) * (dw[j] * dw[k]);
  std::vector<int> signs;
  for (int i = 0; i < n; ++i) signs.push_back(kappa.sign(i));
  const auto inverse = invert_map(framing_coordinates(w, kappa), signs);
  return compose(h, inverse);
}

}  // namespace sfn

#endif  // SFN_FRAMING_HPP
