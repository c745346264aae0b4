#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace hcast {

// Flat view of one parameter (or gradient) block.
struct ParamRef {
    double* data = nullptr;
    Eigen::Index size = 0;
    std::string name;
};

struct GradRef {
    const double* data = nullptr;
    Eigen::Index size = 0;
};

inline ParamRef param_ref(Eigen::MatrixXd& m, std::string name) {
    return {m.data(), m.size(), std::move(name)};
}
inline ParamRef param_ref(Eigen::VectorXd& v, std::string name) {
    return {v.data(), v.size(), std::move(name)};
}
inline GradRef grad_ref(const Eigen::MatrixXd& m) { return {m.data(), m.size()}; }
inline GradRef grad_ref(const Eigen::VectorXd& v) { return {v.data(), v.size()}; }

// Bias-corrected Adam over a fixed list of parameter blocks.
struct AdamState {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    long step = 0;
    std::vector<Eigen::VectorXd> m;  // first moments, aligned with the block list
    std::vector<Eigen::VectorXd> v;  // second moments
};

AdamState make_adam(const std::vector<ParamRef>& params, double lr, double beta1 = 0.9,
                    double beta2 = 0.999, double eps = 1e-8);

// One update; throws std::runtime_error naming the parameter when a gradient
// is non-finite.
void adam_step(AdamState& state, const std::vector<ParamRef>& params,
               const std::vector<GradRef>& grads);

}  // namespace hcast
