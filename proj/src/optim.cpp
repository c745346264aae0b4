#include "hcast/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace hcast {

AdamState make_adam(const std::vector<ParamRef>& params, double lr, double beta1, double beta2,
                    double eps) {
    AdamState s;
    s.lr = lr;
    s.beta1 = beta1;
    s.beta2 = beta2;
    s.eps = eps;
    s.m.reserve(params.size());
    s.v.reserve(params.size());
    for (const ParamRef& p : params) {
        s.m.emplace_back(Eigen::VectorXd::Zero(p.size));
        s.v.emplace_back(Eigen::VectorXd::Zero(p.size));
    }
    return s;
}

void adam_step(AdamState& state, const std::vector<ParamRef>& params,
               const std::vector<GradRef>& grads) {
    if (params.size() != state.m.size() || grads.size() != params.size())
        throw std::invalid_argument("adam_step: parameter/gradient count mismatch");

    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));

    for (std::size_t k = 0; k < params.size(); ++k) {
        const ParamRef& p = params[k];
        const GradRef& g = grads[k];
        if (p.size != g.size || p.size != state.m[k].size())
            throw std::invalid_argument("adam_step: size mismatch for parameter '" + p.name + "'");

        Eigen::Map<Eigen::VectorXd> param(p.data, p.size);
        Eigen::Map<const Eigen::VectorXd> grad(g.data, g.size);
        if (!grad.allFinite())
            throw std::runtime_error("adam_step: non-finite gradient for parameter '" + p.name +
                                     "'");

        Eigen::VectorXd& m = state.m[k];
        Eigen::VectorXd& v = state.v[k];
        m = state.beta1 * m + (1.0 - state.beta1) * grad;
        v = state.beta2 * v + (1.0 - state.beta2) * grad.cwiseProduct(grad);
        param.array() -=
            state.lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + state.eps);
    }
}

}  // namespace hcast
