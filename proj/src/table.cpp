#include "hcast/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hcast {

std::string to_string(ColumnKind kind) {
    switch (kind) {
        case ColumnKind::datetime: return "datetime";
        case ColumnKind::numeric: return "numeric";
        case ColumnKind::categorical: return "categorical";
    }
    return "numeric";
}

ColumnKind column_kind_from_string(const std::string& text) {
    if (text == "datetime") return ColumnKind::datetime;
    if (text == "numeric") return ColumnKind::numeric;
    if (text == "categorical") return ColumnKind::categorical;
    throw std::invalid_argument("unknown column kind '" + text + "'");
}

ColumnKind Schema::kind_of(const std::string& name) const {
    for (const auto& [declared_name, kind] : declared)
        if (declared_name == name) return kind;
    return ColumnKind::numeric;
}

TimeTable::TimeTable(std::vector<Column> columns) : columns_(std::move(columns)) { validate(); }

void TimeTable::validate() {
    if (columns_.empty()) throw std::invalid_argument("TimeTable: no columns");

    std::unordered_set<std::string> names;
    std::size_t datetime_count = 0;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        const Column& c = columns_[i];
        if (!names.insert(c.name).second)
            throw std::invalid_argument("TimeTable: duplicate column name '" + c.name + "'");
        if (c.kind == ColumnKind::datetime) {
            datetime_count++;
            datetime_index_ = i;
        }
    }
    if (datetime_count != 1)
        throw std::invalid_argument("TimeTable: expected exactly one datetime column, found " +
                                    std::to_string(datetime_count));

    rows_ = static_cast<Eigen::Index>(columns_[datetime_index_].stamps.size());
    if (rows_ < 1) throw std::invalid_argument("TimeTable: zero data rows");
    for (const Column& c : columns_) {
        const Eigen::Index n = c.kind == ColumnKind::datetime
                                   ? static_cast<Eigen::Index>(c.stamps.size())
                                   : (c.kind == ColumnKind::numeric
                                          ? c.values.size()
                                          : static_cast<Eigen::Index>(c.categories.size()));
        if (n != rows_)
            throw std::invalid_argument("TimeTable: column '" + c.name + "' has " +
                                        std::to_string(n) + " rows, expected " +
                                        std::to_string(rows_));
        if (c.kind == ColumnKind::numeric &&
            c.missing.size() != static_cast<std::size_t>(rows_))
            throw std::invalid_argument("TimeTable: column '" + c.name + "' missing mask size");
    }

    const auto& stamps = columns_[datetime_index_].stamps;
    for (std::size_t i = 1; i < stamps.size(); ++i)
        if (stamps[i] < stamps[i - 1])
            throw std::invalid_argument("TimeTable: timestamps not nondecreasing at row " +
                                        std::to_string(i));
}

const Column& TimeTable::column(const std::string& name) const {
    for (const Column& c : columns_)
        if (c.name == name) return c;
    throw std::invalid_argument("TimeTable: no column named '" + name + "'");
}

std::vector<std::size_t> TimeTable::numeric_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i].kind == ColumnKind::numeric) out.push_back(i);
    return out;
}

std::vector<std::size_t> TimeTable::categorical_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i].kind == ColumnKind::categorical) out.push_back(i);
    return out;
}

Eigen::MatrixXd TimeTable::numeric_matrix() const {
    const auto idx = numeric_indices();
    Eigen::MatrixXd m(rows_, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = columns_[idx[j]].values;
    return m;
}

Eigen::MatrixXd TimeTable::numeric_matrix(const std::vector<std::string>& names) const {
    Eigen::MatrixXd m(rows_, static_cast<Eigen::Index>(names.size()));
    for (std::size_t j = 0; j < names.size(); ++j) {
        const Column& c = column(names[j]);
        if (c.kind != ColumnKind::numeric)
            throw std::invalid_argument("TimeTable: column '" + names[j] + "' is not numeric");
        m.col(static_cast<Eigen::Index>(j)) = c.values;
    }
    return m;
}

TimeTable TimeTable::slice(Eigen::Index start, Eigen::Index count) const {
    if (start < 0 || count < 1 || start + count > rows_)
        throw std::invalid_argument("TimeTable::slice: range [" + std::to_string(start) + ", " +
                                    std::to_string(start + count) + ") out of bounds for N=" +
                                    std::to_string(rows_));
    std::vector<Column> cols;
    cols.reserve(columns_.size());
    for (const Column& c : columns_) {
        Column out;
        out.name = c.name;
        out.kind = c.kind;
        switch (c.kind) {
            case ColumnKind::datetime:
                out.stamps.assign(c.stamps.begin() + start, c.stamps.begin() + start + count);
                break;
            case ColumnKind::numeric:
                out.values = c.values.segment(start, count);
                out.missing.assign(c.missing.begin() + start, c.missing.begin() + start + count);
                break;
            case ColumnKind::categorical:
                out.categories.assign(c.categories.begin() + start,
                                      c.categories.begin() + start + count);
                break;
        }
        cols.push_back(std::move(out));
    }
    return TimeTable(std::move(cols));
}

Timestamp TimeTable::median_interval() const {
    const auto& stamps = timestamps();
    if (stamps.size() < 2) return 1;
    std::vector<Timestamp> gaps;
    gaps.reserve(stamps.size() - 1);
    for (std::size_t i = 1; i < stamps.size(); ++i) gaps.push_back(stamps[i] - stamps[i - 1]);
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    Timestamp median = gaps[gaps.size() / 2];
    return median > 0 ? median : 1;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch != '\r') {
            field.push_back(ch);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
    const std::string t = trimmed(text);
    if (t.empty()) return false;
    const char* begin = t.c_str();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

TimeTable load_table(const std::string& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_table: cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_table: '" + path + "' is empty");
    const std::vector<std::string> header = split_csv_line(line);

    std::vector<Column> cols(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) {
        cols[j].name = trimmed(header[j]);
        cols[j].kind = schema.kind_of(cols[j].name);
    }

    std::vector<std::vector<std::string>> raw_rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        fields.resize(header.size());
        raw_rows.push_back(std::move(fields));
    }
    if (raw_rows.empty()) throw std::runtime_error("load_table: '" + path + "' has zero data rows");

    const auto n = static_cast<Eigen::Index>(raw_rows.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Column& c = cols[j];
        switch (c.kind) {
            case ColumnKind::datetime: {
                c.stamps.reserve(raw_rows.size());
                for (std::size_t i = 0; i < raw_rows.size(); ++i) {
                    const auto ts = parse_timestamp(trimmed(raw_rows[i][j]));
                    if (!ts)
                        throw std::runtime_error("load_table: bad timestamp '" + raw_rows[i][j] +
                                                 "' in column '" + c.name + "' row " +
                                                 std::to_string(i + 1));
                    c.stamps.push_back(*ts);
                }
                break;
            }
            case ColumnKind::numeric: {
                c.values.resize(n);
                c.missing.assign(raw_rows.size(), 0);
                for (Eigen::Index i = 0; i < n; ++i) {
                    double v;
                    if (parse_double(raw_rows[static_cast<std::size_t>(i)][j], v)) {
                        c.values[i] = v;
                    } else {
                        c.values[i] = std::numeric_limits<double>::quiet_NaN();
                        c.missing[static_cast<std::size_t>(i)] = 1;
                    }
                }
                break;
            }
            case ColumnKind::categorical: {
                c.categories.reserve(raw_rows.size());
                for (std::size_t i = 0; i < raw_rows.size(); ++i)
                    c.categories.push_back(trimmed(raw_rows[i][j]));
                break;
            }
        }
    }

    // Stable sort by timestamp keeps duplicates in file order.
    std::size_t dt = cols.size();
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (cols[j].kind == ColumnKind::datetime) {
            dt = j;
            break;
        }
    if (dt == cols.size()) throw std::runtime_error("load_table: schema declares no datetime column");

    const auto& stamps = cols[dt].stamps;
    if (!std::is_sorted(stamps.begin(), stamps.end())) {
        std::vector<Eigen::Index> order(raw_rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return stamps[a] < stamps[b]; });
        for (Column& c : cols) {
            switch (c.kind) {
                case ColumnKind::datetime: {
                    std::vector<Timestamp> s(c.stamps.size());
                    for (std::size_t i = 0; i < order.size(); ++i) s[i] = c.stamps[order[i]];
                    c.stamps = std::move(s);
                    break;
                }
                case ColumnKind::numeric: {
                    Eigen::VectorXd v(n);
                    std::vector<std::uint8_t> m(c.missing.size());
                    for (std::size_t i = 0; i < order.size(); ++i) {
                        v[static_cast<Eigen::Index>(i)] = c.values[order[i]];
                        m[i] = c.missing[static_cast<std::size_t>(order[i])];
                    }
                    c.values = std::move(v);
                    c.missing = std::move(m);
                    break;
                }
                case ColumnKind::categorical: {
                    std::vector<std::string> s(c.categories.size());
                    for (std::size_t i = 0; i < order.size(); ++i)
                        s[i] = c.categories[order[i]];
                    c.categories = std::move(s);
                    break;
                }
            }
        }
    }
    return TimeTable(std::move(cols));
}

TimeTable impute_missing(const TimeTable& t) {
    std::vector<Column> cols = t.columns();
    for (Column& c : cols) {
        if (c.kind != ColumnKind::numeric) continue;
        bool any_observed = false;
        for (auto m : c.missing)
            if (!m) {
                any_observed = true;
                break;
            }
        if (!any_observed)
            throw std::runtime_error("impute_missing: column '" + c.name + "' is entirely missing");

        // forward fill
        double last = std::numeric_limits<double>::quiet_NaN();
        bool have_last = false;
        for (Eigen::Index i = 0; i < c.values.size(); ++i) {
            if (!c.missing[static_cast<std::size_t>(i)]) {
                last = c.values[i];
                have_last = true;
            } else if (have_last) {
                c.values[i] = last;
                c.missing[static_cast<std::size_t>(i)] = 0;
            }
        }
        // backward fill for the leading gap
        for (Eigen::Index i = c.values.size() - 1; i >= 0; --i) {
            if (!c.missing[static_cast<std::size_t>(i)]) {
                last = c.values[i];
            } else {
                c.values[i] = last;
                c.missing[static_cast<std::size_t>(i)] = 0;
            }
        }
    }
    return TimeTable(std::move(cols));
}

Splits temporal_split(const TimeTable& t, const SplitSpec& spec) {
    if (spec.train_frac <= 0 || spec.val_frac <= 0 || spec.test_frac <= 0)
        throw std::invalid_argument("temporal_split: every fraction must be positive");
    const double sum = spec.train_frac + spec.val_frac + spec.test_frac;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("temporal_split: fractions sum to " + std::to_string(sum) +
                                    ", expected 1");

    const Eigen::Index n = t.rows();
    const auto n_train = static_cast<Eigen::Index>(std::floor(spec.train_frac * static_cast<double>(n)));
    const auto n_val = static_cast<Eigen::Index>(std::floor(spec.val_frac * static_cast<double>(n)));
    const Eigen::Index n_test = n - n_train - n_val;
    if (n_train < 1 || n_val < 1 || n_test < 1)
        throw std::invalid_argument("temporal_split: N=" + std::to_string(n) +
                                    " leaves an empty split (sizes " + std::to_string(n_train) +
                                    "/" + std::to_string(n_val) + "/" + std::to_string(n_test) +
                                    ")");
    return Splits{t.slice(0, n_train), t.slice(n_train, n_val), t.slice(n_train + n_val, n_test)};
}

TimeTable aggregate_window(const TimeTable& t, Eigen::Index start, Eigen::Index count) {
    if (count < 1) throw std::invalid_argument("aggregate_window: empty window");
    if (start < 0 || start + count > t.rows())
        throw std::invalid_argument("aggregate_window: window out of range");

    std::vector<Column> cols;
    cols.reserve(t.columns().size());
    for (const Column& c : t.columns()) {
        Column out;
        out.name = c.name;
        out.kind = c.kind;
        switch (c.kind) {
            case ColumnKind::datetime:
                out.stamps.push_back(c.stamps[static_cast<std::size_t>(start + count - 1)]);
                break;
            case ColumnKind::numeric:
                out.values.resize(1);
                out.values[0] = c.values.segment(start, count).mean();
                out.missing.assign(1, 0);
                break;
            case ColumnKind::categorical: {
                // first-seen mode: ties break to the earliest value in the window
                std::vector<std::pair<std::string, int>> counts;
                for (Eigen::Index i = start; i < start + count; ++i) {
                    const std::string& v = c.categories[static_cast<std::size_t>(i)];
                    bool found = false;
                    for (auto& [val, cnt] : counts)
                        if (val == v) {
                            ++cnt;
                            found = true;
                            break;
                        }
                    if (!found) counts.emplace_back(v, 1);
                }
                const auto best = std::max_element(
                    counts.begin(), counts.end(),
                    [](const auto& a, const auto& b) { return a.second < b.second; });
                out.categories.push_back(best->first);
                break;
            }
        }
        cols.push_back(std::move(out));
    }
    return TimeTable(std::move(cols));
}

TimeTable aggregate_lookback(const TimeTable& t, Eigen::Index window) {
    if (window < 1) throw std::invalid_argument("aggregate_lookback: window must be positive");
    std::vector<TimeTable> rows;
    for (Eigen::Index start = 0; start < t.rows(); start += window) {
        const Eigen::Index count = std::min(window, t.rows() - start);
        rows.push_back(aggregate_window(t, start, count));
    }
    // concatenate the single-row tables
    std::vector<Column> cols = rows.front().columns();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Column& src = rows[r].columns()[j];
            Column& dst = cols[j];
            switch (dst.kind) {
                case ColumnKind::datetime: dst.stamps.push_back(src.stamps[0]); break;
                case ColumnKind::numeric: {
                    Eigen::VectorXd v(dst.values.size() + 1);
                    v << dst.values, src.values[0];
                    dst.values = std::move(v);
                    dst.missing.push_back(0);
                    break;
                }
                case ColumnKind::categorical:
                    dst.categories.push_back(src.categories[0]);
                    break;
            }
        }
    }
    return TimeTable(std::move(cols));
}

}  // namespace hcast
