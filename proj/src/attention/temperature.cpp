#include "infoscale/attention/temperature.hpp"

#include <cmath>

#include "infoscale/detail/overloaded.hpp"
#include "infoscale/error.hpp"

namespace infoscale {
namespace {

// 1 - e^{2 eps / d} n^{-2/d}, evaluated without cancellation.
double infoscale_term(double n, double d, double epsilon) {
  return -std::expm1((2.0 * epsilon - 2.0 * std::log(n)) / d);
}

}  // namespace

void validate(const TemperatureSchedule& schedule) {
  std::visit(detail::overloaded{
                 [](const Vanilla&) {},
                 [](const LogLength&) {},
                 [](const SoftmaxPlus& s) {
                   detail::require(s.base_len >= 2, "SoftmaxPlus base_len must be >= 2");
                 },
                 [](const YarnPreSoftmax& s) {
                   detail::require(s.n_tr >= 2, "YaRN n_tr must be >= 2");
                 },
                 [](const InfoScale& s) {
                   detail::require(s.n_tr >= 2, "InfoScale n_tr must be >= 2");
                   detail::require(s.d_k == 0 || s.d_k >= 2, "InfoScale d_k must be >= 2");
                   detail::require(std::isfinite(s.epsilon), "InfoScale epsilon must be finite");
                 },
                 [](const FixedTemperature& s) {
                   detail::require(s.value > 0.0 && std::isfinite(s.value),
                                   "fixed temperature must be > 0");
                 },
             },
             schedule);
}

std::string schedule_name(const TemperatureSchedule& schedule) {
  return std::visit(detail::overloaded{
                        [](const Vanilla&) { return std::string("vanilla"); },
                        [](const LogLength&) { return std::string("loglength"); },
                        [](const SoftmaxPlus&) { return std::string("softmaxplus"); },
                        [](const YarnPreSoftmax&) { return std::string("yarn"); },
                        [](const InfoScale&) { return std::string("infoscale"); },
                        [](const FixedTemperature&) { return std::string("fixed"); },
                    },
                    schedule);
}

double temperature(const TemperatureSchedule& schedule, std::size_t n_te, std::size_t d_k) {
  validate(schedule);
  detail::require(n_te >= 2, "temperature: n_te must be >= 2");
  const double n = static_cast<double>(n_te);
  return std::visit(
      detail::overloaded{
          [](const Vanilla&) { return 1.0; },
          [&](const LogLength&) { return std::log(n); },
          [&](const SoftmaxPlus& s) {
            return std::log(n) / std::log(static_cast<double>(s.base_len));
          },
          [&](const YarnPreSoftmax& s) {
            const double f = 0.1 * std::log(n / static_cast<double>(s.n_tr)) + 1.0;
            return f * f;
          },
          [&](const InfoScale& s) {
            const std::size_t dim = s.d_k != 0 ? s.d_k : d_k;
            detail::require(dim >= 2, "InfoScale: d_k must be >= 2");
            const double d = static_cast<double>(dim);
            const double numerator = infoscale_term(n, d, s.epsilon);
            const double denominator = infoscale_term(static_cast<double>(s.n_tr), d, s.epsilon);
            if (!(numerator > 0.0) || !(denominator > 0.0)) {
              throw ConfigError("epsilon too large for length");
            }
            return std::sqrt(numerator / denominator);
          },
          [](const FixedTemperature& s) { return s.value; },
      },
      schedule);
}

}  // namespace infoscale
