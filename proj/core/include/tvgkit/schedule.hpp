#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace tvgkit {

/// One abstract time unit. Runs use the non-negative range only.
using Tick = std::int64_t;

/// Sentinel for an unbounded interval end.
inline constexpr Tick kForever = std::numeric_limits<Tick>::max();

/// Half-open tick interval [start, end). `end == kForever` means unbounded.
struct Interval {
  Tick start = 0;
  Tick end = 0;

  bool contains(Tick t) const noexcept { return start <= t && t < end; }
  bool empty() const noexcept { return end <= start; }
  bool bounded() const noexcept { return end != kForever; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Presence during [offset + i*period, offset + i*period + duration) for all i >= 0.
struct PeriodicTail {
  Tick offset = 0;
  Tick period = 1;
  Tick duration = 1;

  /// duration == period: the edge never leaves again after `offset`.
  bool continuous() const noexcept { return duration == period; }
  Interval occurrence(Tick i) const noexcept {
    const Tick s = offset + i * period;
    return {s, s + duration};
  }

  friend bool operator==(const PeriodicTail&, const PeriodicTail&) = default;
};

/// Presence function of one edge: finitely many intervals, optionally followed
/// by a periodic tail. An edge is recurrent (appears infinitely often) exactly
/// when the tail is present.
///
/// Touching occurrences merge: presence is a function of time, so [0,5) and
/// [5,8) form one run with no disappearance at 5.
class PresenceSchedule {
 public:
  PresenceSchedule() = default;
  /// Throws DomainError when intervals are unsorted, overlapping, empty or
  /// negative, or when the tail is malformed or starts before the last interval ends.
  explicit PresenceSchedule(std::vector<Interval> intervals,
                            std::optional<PeriodicTail> tail = std::nullopt);

  /// Present at every tick from `from` on.
  static PresenceSchedule always(Tick from = 0);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const std::optional<PeriodicTail>& tail() const noexcept { return tail_; }

  bool never_present() const noexcept { return intervals_.empty() && !tail_; }
  bool recurrent() const noexcept { return tail_.has_value(); }

  bool present(Tick t) const;
  std::optional<Tick> first_appearance() const;

  /// The maximal presence run containing `t`.
  std::optional<Interval> run_containing(Tick t) const;

  /// Maximal presence runs that intersect [from, to), in time order. Run ends
  /// are not clipped to `to`.
  std::vector<Interval> runs_overlapping(Tick from, Tick to) const;

  /// Earliest d >= ready such that the edge is present throughout [d, d+length).
  std::optional<Tick> earliest_window(Tick ready, Tick length) const;

  /// Presence with `mask` removed. `mask.end` may be kForever.
  PresenceSchedule minus(const Interval& mask) const;

  friend bool operator==(const PresenceSchedule&, const PresenceSchedule&) = default;

 private:
  // Walks maximal runs that end after `from`; stops when `visit` returns false.
  // Periodic tails are infinite, so `visit` must eventually stop the walk.
  void walk_runs(Tick from, const std::function<bool(const Interval&)>& visit) const;

  std::vector<Interval> intervals_;
  std::optional<PeriodicTail> tail_;
};

}  // namespace tvgkit
