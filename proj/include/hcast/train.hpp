#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hcast/linear_models.hpp"
#include "hcast/pipeline.hpp"

namespace hcast {

struct TrainConfig {
    int max_epochs = 100;
    int patience = 10;
    Eigen::Index batch_size = 32;
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    std::uint64_t seed = 0;
};

// Training aborted on a non-finite loss.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, int epoch)
        : std::runtime_error(what), epoch_(epoch) {}
    int epoch() const { return epoch_; }

private:
    int epoch_;
};

struct EpochStats {
    double train_loss = 0.0;
    double val_mse = 0.0;
};

struct TrainHistory {
    std::vector<EpochStats> epochs;
    int best_epoch = 0;  // 1-based; 0 when no epoch ran
    double best_val_mse = 0.0;

    int epochs_run() const { return static_cast<int>(epochs.size()); }
};

// Full-dataset validation MSE in normalized space (evaluated in chunks).
double validation_mse(const ModelVariant& model, const WindowDataset& val);

// Seeded minibatch MSE training with early stopping; the model is left at
// the best-validation epoch's weights. Candidates sharing a seed see the
// same shuffled batch order.
TrainHistory train_supervised(ModelVariant& model, const WindowDataset& train,
                              const WindowDataset& val, const TrainConfig& cfg);

}  // namespace hcast
