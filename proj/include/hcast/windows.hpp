#pragma once

#include <Eigen/Core>
#include <vector>

namespace hcast {

// One training sample: a look-back block and the horizon rows that follow it.
struct WindowedSample {
    Eigen::MatrixXd input;   // S x d
    Eigen::MatrixXd target;  // T x d_target
};

// Start offsets of all windows of a series of length n (stride >= 1);
// sample k covers input rows [start, start+S) and target rows
// [start+S, start+S+T).
std::vector<Eigen::Index> window_starts(Eigen::Index n, Eigen::Index lookback,
                                        Eigen::Index horizon, Eigen::Index stride = 1);

// Materialized sliding windows over one series; input and target rows are
// drawn from the same matrix.
std::vector<WindowedSample> make_windows(const Eigen::MatrixXd& series, Eigen::Index lookback,
                                         Eigen::Index horizon, Eigen::Index stride = 1);

// As above with separate input/target sources (equal row counts); used when
// the model consumes an embedded representation but predicts raw channels.
std::vector<WindowedSample> make_windows(const Eigen::MatrixXd& inputs,
                                         const Eigen::MatrixXd& targets, Eigen::Index lookback,
                                         Eigen::Index horizon, Eigen::Index stride = 1);

}  // namespace hcast
