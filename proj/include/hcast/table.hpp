#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "hcast/datetime.hpp"

namespace hcast {

enum class ColumnKind { datetime, numeric, categorical };

std::string to_string(ColumnKind kind);
ColumnKind column_kind_from_string(const std::string& text);

// One declared column. Only the storage matching `kind` is populated.
struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    Eigen::VectorXd values;                // numeric (NaN where missing)
    std::vector<std::uint8_t> missing;     // numeric missing mask, 1 = missing
    std::vector<Timestamp> stamps;         // datetime
    std::vector<std::string> categories;   // categorical
};

// Column-kind declaration used when loading. Undeclared columns are numeric.
struct Schema {
    std::vector<std::pair<std::string, ColumnKind>> declared;

    ColumnKind kind_of(const std::string& name) const;
};

// Typed columnar dataset with a single datetime column and nondecreasing
// timestamps. Rows with equal timestamps keep file order.
class TimeTable {
public:
    TimeTable() = default;
    explicit TimeTable(std::vector<Column> columns);

    Eigen::Index rows() const { return rows_; }
    const std::vector<Column>& columns() const { return columns_; }
    std::vector<Column>& columns() { return columns_; }

    const Column& column(const std::string& name) const;
    std::size_t datetime_index() const { return datetime_index_; }
    const std::vector<Timestamp>& timestamps() const { return columns_[datetime_index_].stamps; }

    std::vector<std::size_t> numeric_indices() const;
    std::vector<std::size_t> categorical_indices() const;

    // Numeric columns as an N x f matrix, in declared order (or the given
    // subset, which must name numeric columns).
    Eigen::MatrixXd numeric_matrix() const;
    Eigen::MatrixXd numeric_matrix(const std::vector<std::string>& names) const;

    TimeTable slice(Eigen::Index start, Eigen::Index count) const;

    // Median spacing between consecutive timestamps (1 when N < 2).
    Timestamp median_interval() const;

private:
    void validate();

    std::vector<Column> columns_;
    std::size_t datetime_index_ = 0;
    Eigen::Index rows_ = 0;
};

// Parses a comma-separated file with a header row. Unparseable numeric cells
// become missing; rows are stable-sorted by timestamp when out of order.
TimeTable load_table(const std::string& path, const Schema& schema);

// Forward fill then backward fill, per numeric column. A column with no
// observed value at all is an error.
TimeTable impute_missing(const TimeTable& t);

struct SplitSpec {
    double train_frac = 0.7;
    double val_frac = 0.1;
    double test_frac = 0.2;
};

struct Splits {
    TimeTable train;
    TimeTable val;
    TimeTable test;
};

// Contiguous chronological slices of sizes floor(train_frac*N),
// floor(val_frac*N), remainder.
Splits temporal_split(const TimeTable& t, const SplitSpec& spec = {});

// Collapses rows [start, start+count) to one row: mean for numeric columns,
// first-seen mode for categorical, last timestamp for the datetime column.
TimeTable aggregate_window(const TimeTable& t, Eigen::Index start, Eigen::Index count);

// Non-overlapping aggregation in blocks of `window` rows (the look-back
// aggregator); a trailing partial block is aggregated as well.
TimeTable aggregate_lookback(const TimeTable& t, Eigen::Index window);

}  // namespace hcast
