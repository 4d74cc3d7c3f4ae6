#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace img {

/// An eventually periodic sequence preperiod · period^ω, kept in minimal
/// form: the period is primitive and the preperiod as short as possible.
template <class T>
class EventuallyPeriodic {
 public:
  EventuallyPeriodic() : period_{T{}} {}
  EventuallyPeriodic(std::vector<T> preperiod, std::vector<T> period)
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    minimize();
  }

  static EventuallyPeriodic constant(T value) { return EventuallyPeriodic({}, {value}); }

  const std::vector<T>& preperiod() const { return preperiod_; }
  const std::vector<T>& period() const { return period_; }

  T at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  /// The first `n` terms.
  std::vector<T> prefix(std::size_t n) const {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
    return out;
  }

  bool is_constant(T value) const {
    return preperiod_.empty() && period_.size() == 1 && period_[0] == value;
  }

  /// Termwise combination; the result is minimized again.
  template <class Op>
  EventuallyPeriodic zip(const EventuallyPeriodic& other, Op op) const {
    const std::size_t pre = std::max(preperiod_.size(), other.preperiod_.size());
    const std::size_t per = std::lcm(period_.size(), other.period_.size());
    std::vector<T> a(pre), b(per);
    for (std::size_t i = 0; i < pre; ++i) a[i] = op(at(i), other.at(i));
    for (std::size_t i = 0; i < per; ++i) b[i] = op(at(pre + i), other.at(pre + i));
    return EventuallyPeriodic(std::move(a), std::move(b));
  }

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;

 private:
  void minimize() {
    const std::size_t q = period_.size();
    for (std::size_t d = 1; d < q; ++d) {
      if (q % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < q && ok; ++i) ok = period_[i] == period_[i - d];
      if (ok) {
        period_.resize(d);
        break;
      }
    }
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
      std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
      preperiod_.pop_back();
    }
  }

  std::vector<T> preperiod_;
  std::vector<T> period_;
};

using EventuallyPeriodicBits = EventuallyPeriodic<std::uint8_t>;

/// "110(1)" style rendering: preperiod then the period in parentheses.
inline std::string to_string(const EventuallyPeriodicBits& s) {
  std::string out;
  for (auto b : s.preperiod()) out += static_cast<char>('0' + b);
  out += '(';
  for (auto b : s.period()) out += static_cast<char>('0' + b);
  out += ')';
  return out;
}

inline EventuallyPeriodicBits operator+(const EventuallyPeriodicBits& a,
                                        const EventuallyPeriodicBits& b) {
  return a.zip(b, [](std::uint8_t x, std::uint8_t y) { return static_cast<std::uint8_t>(x ^ y); });
}

}  // namespace img
