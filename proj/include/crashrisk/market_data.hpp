// market_data.hpp
// Daily price ingestion and alignment: per-symbol OHLCV loading, union-calendar
// forward-fill alignment, log returns, and forward-horizon drawdown labels.
// All operations are pure functions of their inputs.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crashrisk/csv.hpp"
#include "crashrisk/dates.hpp"
#include "crashrisk/errors.hpp"
#include "crashrisk/matrix.hpp"

namespace crashrisk {

struct AssetSeries {
    std::string symbol;
    std::vector<Date> dates;      // strictly increasing
    std::vector<double> adj_close;  // positive
    std::vector<double> volume;     // optional; empty or same length as dates
};

struct AlignedPanel {
    std::vector<Date> calendar;
    std::vector<std::string> symbols;
    Matrix prices;                   // calendar.size() x symbols.size()
    std::vector<std::uint8_t> fill_flags;  // same shape, 1 = forward-filled cell

    bool filled(std::size_t r, std::size_t c) const { return fill_flags[r * symbols.size() + c] != 0; }
};

struct ReturnPanel {
    std::vector<Date> calendar;  // one shorter than the price calendar
    std::vector<std::string> symbols;
    Matrix returns;  // returns(t, i) = ln P(t+1, i) - ln P(t, i), stamped at calendar[t]

    std::size_t symbol_index(const std::string& symbol) const {
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (symbols[i] == symbol) return i;
        }
        throw DataError("symbol not in panel: " + symbol);
    }
};

struct LabelVector {
    std::vector<Date> calendar;
    std::vector<int> y;  // 0/1
    int horizon_h = 0;
    double threshold_delta = 0.0;

    double base_rate() const {
        if (y.empty()) return 0.0;
        double s = 0.0;
        for (int v : y) s += v;
        return s / static_cast<double>(y.size());
    }
};

// ---------------------------------------------------------------------------
// CSV ingestion
// ---------------------------------------------------------------------------

// Input schema: header with at least `date` and `adj_close`; the full form is
// date,open,high,low,close,adj_close,volume. Rows may arrive in any order and
// are sorted by date; duplicate dates and nonpositive prices are rejected.
inline AssetSeries load_ohlcv_csv(const std::string& path, const std::string& symbol) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw DataError(path + ": empty file");

    const auto header = split_csv_line(lines[0]);
    int date_col = -1, adj_col = -1, vol_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string h = trim(header[i]);
        if (h == "date") date_col = static_cast<int>(i);
        else if (h == "adj_close") adj_col = static_cast<int>(i);
        else if (h == "volume") vol_col = static_cast<int>(i);
    }
    if (date_col < 0 || adj_col < 0) {
        throw DataError(path + ": header must contain 'date' and 'adj_close' columns");
    }

    struct Row {
        Date date;
        double adj_close;
        double volume;
    };
    std::vector<Row> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        const auto fields = split_csv_line(lines[li]);
        const std::string ctx = path + " row " + std::to_string(li + 1);
        if (static_cast<int>(fields.size()) <= std::max(date_col, adj_col)) {
            throw DataError(ctx + ": too few columns");
        }
        Row row{};
        try {
            row.date = parse_date(trim(fields[date_col]));
        } catch (const DataError& e) {
            throw DataError(ctx + ": " + e.what());
        }
        row.adj_close = parse_double(fields[adj_col], ctx);
        if (std::isnan(row.adj_close)) throw DataError(ctx + ": missing adj_close");
        if (row.adj_close <= 0.0) {
            throw DataError(ctx + ": nonpositive price " + format_double(row.adj_close));
        }
        row.volume = std::nan("");
        if (vol_col >= 0 && static_cast<int>(fields.size()) > vol_col) {
            row.volume = parse_double(fields[vol_col], ctx);
            if (!std::isnan(row.volume) && row.volume < 0.0) {
                throw DataError(ctx + ": negative volume");
            }
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw DataError(path + ": no data rows");

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date) {
            throw DataError(path + ": duplicate date " + date_to_string(rows[i].date));
        }
    }

    AssetSeries out;
    out.symbol = symbol;
    out.dates.reserve(rows.size());
    out.adj_close.reserve(rows.size());
    bool any_volume = false;
    for (const auto& r : rows) any_volume = any_volume || !std::isnan(r.volume);
    for (const auto& r : rows) {
        out.dates.push_back(r.date);
        out.adj_close.push_back(r.adj_close);
        if (any_volume) out.volume.push_back(r.volume);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Alignment
// ---------------------------------------------------------------------------

// Union calendar over [start, end], per-symbol forward fill, then drop leading
// rows where any symbol has no prior observation. A filled cell always equals
// the symbol's most recent observed close.
inline AlignedPanel align_panel(const std::vector<AssetSeries>& series, Date start, Date end) {
    if (series.empty()) throw DataError("align_panel: no input series");
    if (start >= end) throw DataError("align_panel: start must precede end");

    std::set<Date> union_dates;
    for (const auto& s : series) {
        for (Date d : s.dates) {
            if (d >= start && d <= end) union_dates.insert(d);
        }
    }
    if (union_dates.empty()) throw DataError("align_panel: no observations in date range");

    const std::vector<Date> calendar_full(union_dates.begin(), union_dates.end());
    const std::size_t n_sym = series.size();

    // First observed date per symbol at or after `start` (observations before
    // `start` are outside the configured range and do not seed the fill).
    std::vector<Date> first_obs(n_sym);
    for (std::size_t i = 0; i < n_sym; ++i) {
        Date f = 0;
        bool found = false;
        for (Date d : series[i].dates) {
            if (d >= start && d <= end) {
                f = d;
                found = true;
                break;
            }
        }
        if (!found) throw DataError("align_panel: symbol " + series[i].symbol + " has no data in range");
        first_obs[i] = f;
    }
    const Date panel_start = *std::max_element(first_obs.begin(), first_obs.end());

    std::vector<Date> calendar;
    for (Date d : calendar_full) {
        if (d >= panel_start) calendar.push_back(d);
    }
    if (calendar.empty()) throw DataError("align_panel: empty calendar after leading-row drop");

    AlignedPanel panel;
    panel.calendar = calendar;
    for (const auto& s : series) panel.symbols.push_back(s.symbol);
    panel.prices = Matrix(calendar.size(), n_sym);
    panel.fill_flags.assign(calendar.size() * n_sym, 0);

    for (std::size_t i = 0; i < n_sym; ++i) {
        std::map<Date, double> obs;
        for (std::size_t k = 0; k < series[i].dates.size(); ++k) {
            const Date d = series[i].dates[k];
            if (d >= start && d <= end) obs[d] = series[i].adj_close[k];
        }
        double last = 0.0;
        bool have_last = false;
        // Seed the fill with observations between `start` and the panel start.
        for (const auto& [d, px] : obs) {
            if (d < panel.calendar.front()) {
                last = px;
                have_last = true;
            }
        }
        for (std::size_t r = 0; r < panel.calendar.size(); ++r) {
            auto it = obs.find(panel.calendar[r]);
            if (it != obs.end()) {
                last = it->second;
                have_last = true;
                panel.prices(r, i) = last;
            } else {
                if (!have_last) throw DataError("align_panel: internal fill failure");
                panel.prices(r, i) = last;
                panel.fill_flags[r * n_sym + i] = 1;
            }
        }
    }
    return panel;
}

// ---------------------------------------------------------------------------
// Returns and labels
// ---------------------------------------------------------------------------

inline ReturnPanel log_returns(const AlignedPanel& panel) {
    if (panel.calendar.size() < 2) throw DataError("log_returns: need at least 2 dates");
    ReturnPanel out;
    out.symbols = panel.symbols;
    out.calendar.assign(panel.calendar.begin() + 1, panel.calendar.end());
    out.returns = Matrix(out.calendar.size(), panel.symbols.size());
    for (std::size_t t = 0; t + 1 < panel.calendar.size(); ++t) {
        for (std::size_t i = 0; i < panel.symbols.size(); ++i) {
            out.returns(t, i) = std::log(panel.prices(t + 1, i)) - std::log(panel.prices(t, i));
        }
    }
    return out;
}

// y[t] = 1 iff the cumulative next-h-day log return of the target is <= -delta
// (inclusive boundary). The last h dates have no label and are omitted.
inline LabelVector make_labels(const ReturnPanel& returns, const std::string& target_symbol,
                               int h, double delta) {
    if (h < 1) throw ConfigError("make_labels: horizon must be >= 1");
    if (delta <= 0.0) throw ConfigError("make_labels: delta must be positive");
    const std::size_t target = returns.symbol_index(target_symbol);
    const std::size_t n = returns.calendar.size();
    if (static_cast<std::size_t>(h) >= n) {
        throw DataError("make_labels: horizon " + std::to_string(h) + " >= number of dates " +
                        std::to_string(n));
    }

    LabelVector labels;
    labels.horizon_h = h;
    labels.threshold_delta = delta;
    labels.calendar.reserve(n - h);
    labels.y.reserve(n - h);
    for (std::size_t t = 0; t + h < n; ++t) {
        double fwd = 0.0;
        for (int k = 1; k <= h; ++k) fwd += returns.returns(t + k, target);
        labels.calendar.push_back(returns.calendar[t]);
        labels.y.push_back(fwd <= -delta ? 1 : 0);
    }
    return labels;
}

// ---------------------------------------------------------------------------
// Canonical panel CSV (exact round trip)
// ---------------------------------------------------------------------------
// Header: date,<sym>,<sym>_filled,...  Prices use %.17g; flags are 0/1.

inline std::string panel_to_csv(const AlignedPanel& panel) {
    std::ostringstream out;
    out << "date";
    for (const auto& s : panel.symbols) out << ',' << s << ',' << s << "_filled";
    out << '\n';
    for (std::size_t r = 0; r < panel.calendar.size(); ++r) {
        out << date_to_string(panel.calendar[r]);
        for (std::size_t i = 0; i < panel.symbols.size(); ++i) {
            out << ',' << format_double(panel.prices(r, i)) << ','
                << (panel.filled(r, i) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

inline AlignedPanel panel_from_csv_text(const std::vector<std::string>& lines,
                                        const std::string& context) {
    if (lines.empty()) throw DataError(context + ": empty panel file");
    const auto header = split_csv_line(lines[0]);
    if (header.size() < 3 || header[0] != "date" || header.size() % 2 == 0) {
        throw DataError(context + ": malformed panel header");
    }
    AlignedPanel panel;
    for (std::size_t i = 1; i < header.size(); i += 2) {
        panel.symbols.push_back(header[i]);
        if (header[i + 1] != header[i] + "_filled") {
            throw DataError(context + ": malformed panel header near " + header[i]);
        }
    }
    const std::size_t n_sym = panel.symbols.size();
    const std::size_t n_rows = lines.size() - 1;
    panel.calendar.reserve(n_rows);
    panel.prices = Matrix(n_rows, n_sym);
    panel.fill_flags.assign(n_rows * n_sym, 0);
    for (std::size_t r = 0; r < n_rows; ++r) {
        const auto fields = split_csv_line(lines[r + 1]);
        if (fields.size() != 1 + 2 * n_sym) {
            throw DataError(context + ": row " + std::to_string(r + 2) + " has wrong column count");
        }
        panel.calendar.push_back(parse_date(fields[0]));
        for (std::size_t i = 0; i < n_sym; ++i) {
            panel.prices(r, i) = parse_double(fields[1 + 2 * i], context);
            panel.fill_flags[r * n_sym + i] = fields[2 + 2 * i] == "1" ? 1 : 0;
        }
    }
    return panel;
}

inline AlignedPanel panel_from_csv(const std::string& path) {
    return panel_from_csv_text(read_lines(path), path);
}

inline std::string return_panel_to_csv(const ReturnPanel& rp) {
    std::ostringstream out;
    out << "date";
    for (const auto& s : rp.symbols) out << ',' << s;
    out << '\n';
    for (std::size_t r = 0; r < rp.calendar.size(); ++r) {
        out << date_to_string(rp.calendar[r]);
        for (std::size_t i = 0; i < rp.symbols.size(); ++i) {
            out << ',' << format_double(rp.returns(r, i));
        }
        out << '\n';
    }
    return out.str();
}

inline ReturnPanel return_panel_from_csv(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw DataError(path + ": empty return panel");
    const auto header = split_csv_line(lines[0]);
    if (header.empty() || header[0] != "date") throw DataError(path + ": malformed header");
    ReturnPanel rp;
    rp.symbols.assign(header.begin() + 1, header.end());
    rp.returns = Matrix(lines.size() - 1, rp.symbols.size());
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_csv_line(lines[r]);
        if (fields.size() != header.size()) {
            throw DataError(path + ": row " + std::to_string(r + 1) + " has wrong column count");
        }
        rp.calendar.push_back(parse_date(fields[0]));
        for (std::size_t i = 0; i < rp.symbols.size(); ++i) {
            rp.returns(r - 1, i) = parse_double(fields[i + 1], path);
        }
    }
    return rp;
}

}  // namespace crashrisk
