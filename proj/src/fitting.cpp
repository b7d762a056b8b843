#include "citeswing/fitting.hpp"

namespace citeswing::fitting {

const ModelSpec& model_spec(ModelId id) noexcept {
    return id == ModelId::Harris ? kHarris : kRational;
}

const ModelSpec& parse_model(std::string_view name) {
    if (name == kHarris.name) return kHarris;
    if (name == kRational.name) return kRational;
    throw Error(ErrorCode::InvalidArgument, "unknown model '" + std::string(name) + "'");
}

}  // namespace citeswing::fitting
