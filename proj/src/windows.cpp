#include "hcast/windows.hpp"

#include <stdexcept>
#include <string>

namespace hcast {

std::vector<Eigen::Index> window_starts(Eigen::Index n, Eigen::Index lookback,
                                        Eigen::Index horizon, Eigen::Index stride) {
    if (lookback < 1 || horizon < 1) throw std::invalid_argument("window_starts: S and T must be positive");
    if (stride < 1) throw std::invalid_argument("window_starts: stride must be positive");
    if (n < lookback + horizon)
        throw std::invalid_argument("window_starts: series length " + std::to_string(n) +
                                    " is below the required minimum S+T=" +
                                    std::to_string(lookback + horizon));
    std::vector<Eigen::Index> starts;
    for (Eigen::Index k = 0; k + lookback + horizon <= n; k += stride) starts.push_back(k);
    return starts;
}

std::vector<WindowedSample> make_windows(const Eigen::MatrixXd& series, Eigen::Index lookback,
                                         Eigen::Index horizon, Eigen::Index stride) {
    return make_windows(series, series, lookback, horizon, stride);
}

std::vector<WindowedSample> make_windows(const Eigen::MatrixXd& inputs,
                                         const Eigen::MatrixXd& targets, Eigen::Index lookback,
                                         Eigen::Index horizon, Eigen::Index stride) {
    if (inputs.rows() != targets.rows())
        throw std::invalid_argument("make_windows: input/target row counts differ");
    const auto starts = window_starts(inputs.rows(), lookback, horizon, stride);
    std::vector<WindowedSample> samples;
    samples.reserve(starts.size());
    for (const Eigen::Index k : starts)
        samples.push_back(WindowedSample{inputs.middleRows(k, lookback),
                                         targets.middleRows(k + lookback, horizon)});
    return samples;
}

}  // namespace hcast
