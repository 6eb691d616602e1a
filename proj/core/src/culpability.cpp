#include "argrank/culpability.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "argrank/kb_analysis.hpp"
#include "argrank/ranking.hpp"

namespace argrank {

// --- Rational --------------------------------------------------------------

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num * other.den + other.num * den, den * other.den);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(num * other.num, den * other.den);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  return num * other.den <=> other.num * den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

// --- Culpability measures --------------------------------------------------

std::optional<Rational> CulpabilityReport::exact_value_of(const Formula& f) const {
  if (!exact) return std::nullopt;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (formulas[i] == f) return exact_values[i];
  }
  return std::nullopt;
}

std::optional<double> CulpabilityReport::real_value_of(const Formula& f) const {
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (formulas[i] == f) return exact ? exact_values[i].to_double() : real_values[i];
  }
  return std::nullopt;
}

namespace {

CulpabilityReport exact_report(const ABF& abf, std::string measure_id) {
  CulpabilityReport report;
  report.measure_id = std::move(measure_id);
  report.formulas = abf.ab;
  report.exact = true;
  report.exact_values.assign(abf.ab.size(), Rational(0));
  return report;
}

}  // namespace

CulpabilityReport culp_drastic(const ABF& abf) {
  CulpabilityReport report = exact_report(abf, "drastic");
  SubsetFamily mic = enumerate_mic(abf);
  std::uint32_t blamed = 0;
  for (std::uint32_t mask : mic.masks) blamed |= mask;
  for (std::size_t i = 0; i < abf.ab.size(); ++i) {
    if (blamed & (std::uint32_t{1} << i)) report.exact_values[i] = Rational(1);
  }
  return report;
}

CulpabilityReport culp_share(const ABF& abf) {
  CulpabilityReport report = exact_report(abf, "share");
  SubsetFamily mic = enumerate_mic(abf);
  if (mic.empty()) return report;
  const std::int64_t total = static_cast<std::int64_t>(mic.size());
  for (std::size_t i = 0; i < abf.ab.size(); ++i) {
    std::int64_t containing = 0;
    for (std::uint32_t mask : mic.masks) {
      if (mask & (std::uint32_t{1} << i)) ++containing;
    }
    report.exact_values[i] = Rational(containing, total);
  }
  return report;
}

CulpabilityReport culp_weighted(const ABF& abf) {
  CulpabilityReport report = exact_report(abf, "weighted");
  SubsetFamily mic = enumerate_mic(abf);
  if (mic.empty()) return report;
  std::int64_t total_size = 0;
  for (std::uint32_t mask : mic.masks) total_size += std::popcount(mask);
  for (std::size_t i = 0; i < abf.ab.size(); ++i) {
    Rational contribution(0);
    for (std::uint32_t mask : mic.masks) {
      if (mask & (std::uint32_t{1} << i)) {
        contribution = contribution + Rational(1, std::popcount(mask));
      }
    }
    report.exact_values[i] = contribution * Rational(1, total_size);
  }
  return report;
}

CulpabilityReport induced_culpability(const ABF& abf, DiagramPolicy policy,
                                      double epsilon, std::size_t max_iter) {
  CulpabilityReport report;
  report.measure_id = "induced";
  report.formulas = abf.ab;
  report.exact = false;

  AttackDiagram diagram = build_attack_diagram(abf, policy);
  Ranking ranking = categoriser(diagram.af, epsilon, max_iter);
  const double best = best_score(ranking.semantics_id);
  for (std::size_t i = 0; i < abf.ab.size(); ++i) {
    std::size_t node = diagram.node_of(AssumptionMask{1} << i);
    report.real_values.push_back(best - ranking.scores.at(node));
  }
  return report;
}

}  // namespace argrank
