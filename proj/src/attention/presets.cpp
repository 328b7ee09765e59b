#include "infoscale/attention/presets.hpp"

#include "infoscale/error.hpp"

namespace infoscale::presets {
namespace {

AttentionSpec base(std::size_t n, std::size_t d_k) {
  AttentionSpec spec;
  spec.n = n;
  spec.d_k = d_k;
  spec.mask = CausalMask{};
  spec.positional = RoPE{};
  return spec;
}

}  // namespace

AttentionSpec windowed(std::size_t n, std::size_t d_k, std::size_t w) {
  AttentionSpec spec = base(n, d_k);
  spec.mask = WindowedMask{w};
  spec.cosine = true;
  spec.cos_scale = kWindowedCosScale;
  return spec;
}

AttentionSpec streaming_llm(std::size_t n, std::size_t d_k, std::size_t w) {
  detail::require(w > 4, "streaming_llm: window must exceed the 4 sink tokens");
  AttentionSpec spec = base(n, d_k);
  spec.mask = SinkWindowMask{4, w - 4};
  return spec;
}

AttentionSpec lm_infinite(std::size_t n, std::size_t d_k, std::size_t w) {
  AttentionSpec spec = base(n, d_k);
  spec.mask = LambdaMask{5, w};
  spec.positional = ReRoPE{kDefaultRopeBase, w};
  return spec;
}

AttentionSpec alibi(std::size_t n, std::size_t d_k, std::size_t head, std::size_t head_count) {
  AttentionSpec spec = base(n, d_k);
  spec.positional = ALiBi{head_count, head};
  return spec;
}

AttentionSpec position_interpolation(std::size_t n, std::size_t d_k, double factor) {
  AttentionSpec spec = base(n, d_k);
  spec.positional = PIScaledRoPE{kDefaultRopeBase, factor};
  return spec;
}

AttentionSpec rerope(std::size_t n, std::size_t d_k, std::size_t window) {
  AttentionSpec spec = base(n, d_k);
  spec.positional = ReRoPE{kDefaultRopeBase, window};
  return spec;
}

AttentionSpec with_infoscale(AttentionSpec spec, std::size_t n_tr, double epsilon) {
  spec.schedule = InfoScale{n_tr, 0, epsilon};
  return spec;
}

AttentionSpec with_cosscale(AttentionSpec spec, double alpha) {
  spec.cosine = true;
  spec.cos_scale = alpha;
  return spec;
}

}  // namespace infoscale::presets
