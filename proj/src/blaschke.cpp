#include "tto/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tto {

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex constant)
    : zeros_(std::move(zeros)), constant_(constant) {
  for (const auto& a : zeros_) {
    if (std::abs(a) >= 1.0) {
      throw DomainError("Blaschke zero must lie strictly inside the disk");
    }
  }
  const double cm = std::abs(constant_);
  if (std::abs(cm - 1.0) > 1e-9) {
    throw DomainError("Blaschke constant must be unimodular");
  }
  constant_ /= cm;
  std::sort(zeros_.begin(), zeros_.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
}

BlaschkeProduct BlaschkeProduct::zpow(int n) {
  if (n < 0) throw DomainError("zpow degree must be nonnegative");
  return BlaschkeProduct(std::vector<Complex>(n, Complex(0.0)));
}

bool BlaschkeProduct::is_monomial() const {
  for (const auto& a : zeros_)
    if (std::abs(a) > kZeroMatchTol) return false;
  return true;
}

Complex BlaschkeProduct::evaluate(Complex z) const {
  Complex out = constant_;
  for (const auto& a : zeros_) out *= (z - a) / (1.0 - std::conj(a) * z);
  return out;
}

CircleFunction BlaschkeProduct::sample(int grid_size) const {
  return sample_fn([this](Complex t) { return evaluate(t); }, grid_size);
}

BlaschkeProduct BlaschkeProduct::times(const BlaschkeProduct& other) const {
  std::vector<Complex> zs = zeros_;
  zs.insert(zs.end(), other.zeros_.begin(), other.zeros_.end());
  return BlaschkeProduct(std::move(zs), constant_ * other.constant_);
}

std::optional<BlaschkeProduct> BlaschkeProduct::divide_out(
    const BlaschkeProduct& divisor) const {
  std::vector<Complex> rest = zeros_;
  for (const auto& a : divisor.zeros_) {
    auto best = rest.end();
    double best_dist = kZeroMatchTol;
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const double d = std::abs(*it - a);
      if (d <= best_dist) {
        best_dist = d;
        best = it;
      }
    }
    if (best == rest.end()) return std::nullopt;
    rest.erase(best);
  }
  return BlaschkeProduct(std::move(rest), constant_ / divisor.constant_);
}

bool BlaschkeProduct::equal_up_to_constant(const BlaschkeProduct& other,
                                           double tol) const {
  if (degree() != other.degree()) return false;
  std::vector<Complex> rest = other.zeros_;
  for (const auto& a : zeros_) {
    auto best = rest.end();
    double best_dist = tol;
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const double d = std::abs(*it - a);
      if (d <= best_dist) {
        best_dist = d;
        best = it;
      }
    }
    if (best == rest.end()) return false;
    rest.erase(best);
  }
  return true;
}

std::string BlaschkeProduct::label() const {
  if (degree() == 0) return "1";
  if (is_monomial()) return "z^" + std::to_string(degree());
  std::ostringstream os;
  os << "blaschke[deg " << degree() << "]";
  return os.str();
}

nlohmann::json BlaschkeProduct::to_json() const {
  nlohmann::json zs = nlohmann::json::array();
  for (const auto& a : zeros_) zs.push_back({a.real(), a.imag()});
  return {{"zeros", zs}, {"constant", {constant_.real(), constant_.imag()}}};
}

BlaschkeProduct BlaschkeProduct::from_json(const nlohmann::json& j) {
  std::vector<Complex> zs;
  for (const auto& z : j.at("zeros")) {
    zs.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  }
  const auto& c = j.at("constant");
  return BlaschkeProduct(std::move(zs),
                         Complex(c.at(0).get<double>(), c.at(1).get<double>()));
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw DomainError("evaluation point outside the closed disk");
  }
  return b.evaluate(z);
}

std::optional<BlaschkeProduct> blaschke_divide(const BlaschkeProduct& alpha,
                                               const BlaschkeProduct& theta) {
  return theta.divide_out(alpha);
}

LaurentSymbol::LaurentSymbol(int lo, std::vector<Complex> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentSymbol::trim() {
  std::size_t head = 0;
  while (head < coeffs_.size() && coeffs_[head] == Complex(0.0)) ++head;
  std::size_t tail = coeffs_.size();
  while (tail > head && coeffs_[tail - 1] == Complex(0.0)) --tail;
  if (head == tail) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  coeffs_ = std::vector<Complex>(coeffs_.begin() + head, coeffs_.begin() + tail);
  lo_ += static_cast<int>(head);
}

LaurentSymbol LaurentSymbol::monomial(int n, Complex c) {
  return LaurentSymbol(n, {c});
}

LaurentSymbol LaurentSymbol::random_band(int lo, int hi, Rng& rng) {
  if (lo > hi) throw DomainError("random_band: lo > hi");
  std::vector<Complex> cs(static_cast<std::size_t>(hi - lo + 1));
  for (auto& c : cs) c = rng.complex_box();
  return LaurentSymbol(lo, std::move(cs));
}

Complex LaurentSymbol::coeff(int n) const {
  if (is_zero() || n < lo_ || n > band_max()) return {0.0, 0.0};
  return coeffs_[n - lo_];
}

LaurentSymbol LaurentSymbol::conjugated() const {
  if (is_zero()) return {};
  std::vector<Complex> cs(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    cs[i] = std::conj(coeffs_[coeffs_.size() - 1 - i]);
  }
  return LaurentSymbol(-band_max(), std::move(cs));
}

LaurentSymbol LaurentSymbol::shifted(int k) const {
  if (is_zero()) return {};
  return LaurentSymbol(lo_ + k, coeffs_);
}

LaurentSymbol LaurentSymbol::times(const LaurentSymbol& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Complex> cs(coeffs_.size() + other.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      cs[i + j] += coeffs_[i] * other.coeffs_[j];
  return LaurentSymbol(lo_ + other.lo_, std::move(cs));
}

LaurentSymbol LaurentSymbol::plus(const LaurentSymbol& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const int lo = std::min(lo_, other.lo_);
  const int hi = std::max(band_max(), other.band_max());
  std::vector<Complex> cs(static_cast<std::size_t>(hi - lo + 1), Complex(0.0));
  for (int n = lo; n <= hi; ++n) cs[n - lo] = coeff(n) + other.coeff(n);
  return LaurentSymbol(lo, std::move(cs));
}

Complex LaurentSymbol::evaluate(Complex t) const {
  Complex acc = 0.0;
  for (int n = lo_; n <= band_max(); ++n) acc += coeff(n) * std::pow(t, n);
  return acc;
}

CircleFunction LaurentSymbol::sample(int grid_size) const {
  // Powers of a unimodular point are cheap to accumulate directly.
  CircleFunction f = constant_fn(0.0, grid_size);
  for (int k = 0; k < grid_size; ++k) {
    const Complex t = grid_point(grid_size, k);
    Complex tn = std::pow(t, lo_);
    Complex acc = 0.0;
    for (const auto& c : coeffs_) {
      acc += c * tn;
      tn *= t;
    }
    f.samples[k] = acc;
  }
  return f;
}

std::string LaurentSymbol::encode() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (int n = lo_; n <= band_max(); ++n) {
    if (!first) os << ";";
    first = false;
    const Complex c = coeff(n);
    os << n << ":" << c.real() << "," << c.imag();
  }
  return os.str();
}

LaurentSymbol LaurentSymbol::parse(const std::string& text) {
  if (text.empty()) return {};
  LaurentSymbol acc;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    const auto colon = item.find(':');
    const auto comma = item.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos) {
      throw ConfigError("bad symbol term '" + item + "', want n:re,im");
    }
    const int n = std::stoi(item.substr(0, colon));
    const double re = std::stod(item.substr(colon + 1, comma - colon - 1));
    const double im = std::stod(item.substr(comma + 1));
    acc = acc.plus(LaurentSymbol::monomial(n, Complex(re, im)));
  }
  return acc;
}

}  // namespace tto
