#ifndef GAWS_SERIES_HPP
#define GAWS_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaws {

/// One series on the common time grid. Missing observations keep their grid
/// slot with valid=false.
struct TimeSeriesSample {
    std::string id;
    std::vector<double> values;
    std::vector<std::uint8_t> valid;  // 1 = observed

    std::size_t size() const { return values.size(); }

    std::size_t n_observed() const {
        std::size_t n = 0;
        for (auto v : valid) n += v ? 1 : 0;
        return n;
    }

    static TimeSeriesSample dense(std::string id, std::vector<double> values) {
        TimeSeriesSample s;
        s.id = std::move(id);
        s.valid.assign(values.size(), 1);
        s.values = std::move(values);
        return s;
    }
};

/// Common regressors over the grid: integer time index plus calendar fields.
struct RegressorMatrix {
    std::vector<double> time_index;   // 0..N-1
    std::vector<int> hour_of_day;     // 0..23
    std::vector<int> day_of_week;     // 1..7, ISO (Mon=1)

    std::size_t size() const { return time_index.size(); }

    /// Grid for hourly data starting at a given ISO weekday/hour.
    static RegressorMatrix hourly(std::size_t n, int start_dow = 1, int start_hour = 0) {
        if (start_dow < 1 || start_dow > 7 || start_hour < 0 || start_hour > 23)
            throw std::invalid_argument("RegressorMatrix::hourly: bad calendar start");
        RegressorMatrix x;
        x.time_index.resize(n);
        x.hour_of_day.resize(n);
        x.day_of_week.resize(n);
        for (std::size_t t = 0; t < n; ++t) {
            x.time_index[t] = static_cast<double>(t);
            const std::size_t h = start_hour + t;
            x.hour_of_day[t] = static_cast<int>(h % 24);
            x.day_of_week[t] = static_cast<int>(((start_dow - 1) + h / 24) % 7) + 1;
        }
        return x;
    }
};

}  // namespace gaws

#endif
