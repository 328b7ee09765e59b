#include "infoscale/diagx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infoscale/attention/attend.hpp"
#include "infoscale/entropy.hpp"
#include "infoscale/error.hpp"
#include "infoscale/numkernel/softmax.hpp"
#include "infoscale/numkernel/sphere.hpp"
#include "infoscale/numkernel/stats.hpp"
#include "infoscale/theory.hpp"

namespace infoscale {
namespace {

struct KindName {
  SweepKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {SweepKind::EntropyVsLength, "entropy-vs-length"},
    {SweepKind::CosHistogram, "cos-histogram"},
    {SweepKind::QkHeatmap, "qk-heatmap"},
    {SweepKind::EtaStarCurve, "eta-star-curve"},
    {SweepKind::LaplaceErrorCurve, "laplace-error-curve"},
    {SweepKind::MassInWindowVsAlpha, "mass-in-window-vs-alpha"},
    {SweepKind::DominanceVsDelta, "dominance-vs-delta"},
};

template <typename Fn>
auto at_point(const std::string& point, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(point + ": " + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(point + ": " + e.what());
  }
}

template <typename T>
void require_grid(const std::vector<T>& grid, const char* what) {
  detail::require(!grid.empty(), std::string("sweep: empty ") + what + " grid");
}

Matrix unit_inputs(std::uint64_t seed, std::size_t d, std::size_t n) {
  SeededRng rng(seed);
  return sample_hypersphere(rng, d, 1.0, n);
}

void entropy_vs_length(const SweepSpec& spec, SweepResult& out) {
  require_grid(spec.lengths, "length");
  out.columns = {"n", "lambda", "H_mc", "H_stderr", "H_closed", "H_taylor"};
  const SeededRng root(spec.seed);
  const double root_d = std::sqrt(static_cast<double>(spec.d));
  for (std::size_t n : spec.lengths) {
    out.rows.push_back(at_point("n=" + std::to_string(n), [&] {
      const double lambda = temperature(spec.schedule, n, spec.d) / root_d;
      const MeanEstimate mc = entropy_montecarlo(root.fork(n), lambda, spec.v, spec.d, n, spec.trials);
      double closed = std::numeric_limits<double>::quiet_NaN();
      double taylor = closed;
      if (lambda * lambda * spec.v * spec.v < 1.0) {
        const ClosedEntropy c = entropy_estimate_closed(lambda, spec.v, spec.d, n);
        closed = c.exact_form;
        taylor = c.taylor;
      }
      return std::vector<double>{static_cast<double>(n), lambda, mc.mean, mc.stderr_, closed, taylor};
    }));
  }
}

void cos_histogram_rows(const SweepSpec& spec, SweepResult& out) {
  out.columns = {"bin_lo", "bin_hi", "count"};
  const Histogram h = at_point("n=" + std::to_string(spec.n), [&] {
    SeededRng rng(spec.seed);
    const Matrix q = sample_hypersphere(rng, spec.d, 1.0, spec.n);
    const Matrix k = sample_hypersphere(rng, spec.d, 1.0, spec.n);
    return cos_histogram(causal_cosines(q, k), spec.bins);
  });
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out.rows.push_back({h.edges[b], h.edges[b + 1], static_cast<double>(h.counts[b])});
  }
}

void heatmap_rows(const SweepSpec& spec, SweepResult& out) {
  out.columns = {"i", "j", "pre_rope", "post_rope"};
  const Heatmap h = at_point("alpha=" + std::to_string(spec.alpha), [&] {
    const Matrix x = unit_inputs(spec.seed, spec.d, spec.n);
    return qk_heatmap(x, x, spec.alpha, spec.positional);
  });
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      out.rows.push_back({static_cast<double>(i), static_cast<double>(j), h.pre_rope(i, j),
                          h.post_rope(i, j)});
    }
  }
}

void eta_star_rows(const SweepSpec& spec, SweepResult& out) {
  require_grid(spec.alphas, "alpha");
  require_grid(spec.dims, "d");
  out.columns = {"alpha", "d", "theoretical", "numerical", "abs_error"};
  const TheoremCheck check = at_point("eta-star grid", [&] {
    return eta_star_check(spec.alphas, spec.dims, spec.tol);
  });
  for (std::size_t i = 0; i < check.parameter_grid.size(); ++i) {
    out.rows.push_back({check.parameter_grid[i].first,
                        static_cast<double>(check.parameter_grid[i].second), check.theoretical[i],
                        check.numerical[i], check.abs_error[i]});
  }
}

void laplace_rows(const SweepSpec& spec, SweepResult& out) {
  require_grid(spec.dims, "d");
  out.columns = {"d", "exact", "approx", "rel_error"};
  for (std::size_t d : spec.dims) {
    const LaplaceCheck c =
        at_point("d=" + std::to_string(d), [&] { return laplace_sin_integral_check(d); });
    out.rows.push_back({static_cast<double>(d), c.exact, c.approx, c.rel_error});
  }
}

void mass_rows(const SweepSpec& spec, SweepResult& out) {
  require_grid(spec.alphas, "alpha");
  out.columns = {"alpha", "mass"};
  const Matrix x = unit_inputs(spec.seed, spec.d, spec.n);
  for (double alpha : spec.alphas) {
    const double mass = at_point("alpha=" + std::to_string(alpha), [&] {
      AttentionSpec attn;
      attn.n = spec.n;
      attn.d_k = spec.d;
      attn.schedule = Vanilla{};
      attn.mask = CausalMask{};
      attn.positional = RoPE{};
      attn.cosine = true;
      attn.cos_scale = alpha;
      return mass_in_window(softmax_rows(attention_logits(x, x, attn)), spec.window);
    });
    out.rows.push_back({alpha, mass});
  }
}

void dominance_rows(const SweepSpec& spec, SweepResult& out) {
  require_grid(spec.deltas, "delta");
  out.columns = {"delta", "correlation"};
  const SeededRng rng(spec.seed);
  for (double delta : spec.deltas) {
    const double corr = at_point("delta=" + std::to_string(delta), [&] {
      return dominance_diagnostic(rng, spec.n, spec.d, spec.alpha, delta);
    });
    out.rows.push_back({delta, corr});
  }
}

}  // namespace

std::string sweep_kind_name(SweepKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  throw ConfigError("unknown sweep kind");
}

SweepKind parse_sweep_kind(const std::string& name) {
  for (const auto& entry : kKindNames) {
    if (name == entry.name) return entry.kind;
  }
  throw ConfigError("unknown sweep kind '" + name + "'");
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult out;
  out.spec = spec;
  out.provenance = {spec.seed, INFOSCALE_VERSION, spec.timestamp};
  switch (spec.kind) {
    case SweepKind::EntropyVsLength: entropy_vs_length(spec, out); break;
    case SweepKind::CosHistogram: cos_histogram_rows(spec, out); break;
    case SweepKind::QkHeatmap: heatmap_rows(spec, out); break;
    case SweepKind::EtaStarCurve: eta_star_rows(spec, out); break;
    case SweepKind::LaplaceErrorCurve: laplace_rows(spec, out); break;
    case SweepKind::MassInWindowVsAlpha: mass_rows(spec, out); break;
    case SweepKind::DominanceVsDelta: dominance_rows(spec, out); break;
  }
  return out;
}

Histogram cos_histogram(std::span<const double> values, std::size_t bins) {
  detail::require(bins >= 2, "cos_histogram: bins must be >= 2");
  constexpr double slack = 1e-9;
  Histogram h;
  h.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) {
    h.edges[b] = -1.0 + 2.0 * static_cast<double>(b) / static_cast<double>(bins);
  }
  h.edges.back() = 1.0;
  h.counts.assign(bins, 0);
  for (double x : values) {
    detail::require(x >= -1.0 - slack && x <= 1.0 + slack, "cos_histogram: value outside [-1, 1]");
    const double clamped = std::clamp(x, -1.0, 1.0);
    auto b = static_cast<std::size_t>((clamped + 1.0) * 0.5 * static_cast<double>(bins));
    h.counts[std::min(b, bins - 1)] += 1;
  }
  return h;
}

Matrix minmax_normalize(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  if (m.size() == 0) return out;
  const auto [lo, hi] = std::minmax_element(m.data().begin(), m.data().end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t idx = 0; idx < m.size(); ++idx) {
    out.data()[idx] = (m.data()[idx] - *lo) / range;
  }
  return out;
}

Heatmap qk_heatmap(const Matrix& q, const Matrix& k, double alpha, const PositionalScheme& scheme) {
  detail::require(q.rows() == k.rows() && q.cols() == k.cols(), "qk_heatmap: Q and K shapes differ");
  detail::require(alpha > 0.0 && std::isfinite(alpha), "qk_heatmap: alpha must be > 0");
  for (const Matrix* m : {&q, &k}) {
    for (std::size_t i = 0; i < m->rows(); ++i) {
      detail::require(std::abs(norm(m->row(i)) - 1.0) <= 1e-9, "qk_heatmap: rows must be unit length");
    }
  }
  Matrix pre = matmul_transposed(q, k);
  Matrix post = rope_score_matrix(q, k, scheme);
  for (double& x : pre.data()) x *= alpha;
  for (double& x : post.data()) x *= alpha;
  return {minmax_normalize(pre), minmax_normalize(post)};
}

std::vector<double> causal_cosines(const Matrix& q, const Matrix& k) {
  detail::require(q.rows() == k.rows() && q.cols() == k.cols(), "causal_cosines: shapes differ");
  std::vector<double> out;
  out.reserve(q.rows() * (q.rows() + 1) / 2);
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.push_back(dot(q.row(i), k.row(j)));
  }
  return out;
}

}  // namespace infoscale
