#include "tvgkit/schedule.hpp"

#include <algorithm>
#include <string>

#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

std::string describe(const Interval& iv) {
  return "[" + std::to_string(iv.start) + "," +
         (iv.bounded() ? std::to_string(iv.end) : std::string("inf")) + ")";
}

// Sorts and merges touching or overlapping intervals.
std::vector<Interval> normalize(std::vector<Interval> ivs) {
  std::erase_if(ivs, [](const Interval& iv) { return iv.empty(); });
  std::sort(ivs.begin(), ivs.end());
  std::vector<Interval> out;
  for (const auto& iv : ivs) {
    if (!out.empty() && iv.start <= out.back().end) {
      out.back().end = std::max(out.back().end, iv.end);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

PresenceSchedule::PresenceSchedule(std::vector<Interval> intervals, std::optional<PeriodicTail> tail)
    : intervals_(std::move(intervals)), tail_(tail) {
  Tick previous_end = 0;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (iv.start < 0) throw DomainError("interval " + describe(iv) + " starts before tick 0");
    if (!iv.bounded()) throw DomainError("interval " + describe(iv) + " is unbounded; use a periodic tail");
    if (iv.empty()) throw DomainError("interval " + describe(iv) + " is empty");
    if (i > 0 && iv.start < previous_end) {
      throw DomainError("interval " + describe(iv) + " overlaps or precedes the previous one");
    }
    previous_end = iv.end;
  }
  if (tail_) {
    if (tail_->period <= 0) throw DomainError("periodic tail needs period > 0");
    if (tail_->duration <= 0 || tail_->duration > tail_->period) {
      throw DomainError("periodic tail needs 0 < duration <= period");
    }
    if (tail_->offset < previous_end || tail_->offset < 0) {
      throw DomainError("periodic tail offset " + std::to_string(tail_->offset) +
                        " precedes the end of the last interval");
    }
  }
}

PresenceSchedule PresenceSchedule::always(Tick from) {
  return PresenceSchedule({}, PeriodicTail{from, 1, 1});
}

void PresenceSchedule::walk_runs(Tick from, const std::function<bool(const Interval&)>& visit) const {
  const bool tail_touches = tail_ && !intervals_.empty() && intervals_.back().end == tail_->offset;
  Tick first_plain = 0;

  // Finite intervals are disjoint but may touch; fold touching ones together.
  for (std::size_t i = 0; i < intervals_.size();) {
    Interval run = intervals_[i++];
    while (i < intervals_.size() && intervals_[i].start == run.end) run.end = intervals_[i++].end;
    if (i == intervals_.size() && tail_touches) {
      run.end = tail_->continuous() ? kForever : tail_->occurrence(0).end;
      first_plain = 1;
    }
    if (run.end <= from) continue;
    if (!visit(run)) return;
    if (!run.bounded()) return;
  }
  if (!tail_) return;
  if (tail_->continuous()) {
    if (!tail_touches) visit({tail_->offset, kForever});
    return;
  }
  Tick i = first_plain;
  if (from > tail_->offset) i = std::max(i, (from - tail_->offset) / tail_->period);
  if (tail_->occurrence(i).end <= from) ++i;
  for (;; ++i) {
    if (!visit(tail_->occurrence(i))) return;
  }
}

bool PresenceSchedule::present(Tick t) const { return run_containing(t).has_value(); }

std::optional<Tick> PresenceSchedule::first_appearance() const {
  std::optional<Tick> first;
  walk_runs(0, [&](const Interval& run) {
    first = run.start;
    return false;
  });
  return first;
}

std::optional<Interval> PresenceSchedule::run_containing(Tick t) const {
  std::optional<Interval> found;
  walk_runs(t, [&](const Interval& run) {
    if (run.contains(t)) found = run;
    return false;
  });
  return found;
}

std::vector<Interval> PresenceSchedule::runs_overlapping(Tick from, Tick to) const {
  std::vector<Interval> out;
  if (to <= from) return out;
  walk_runs(from, [&](const Interval& run) {
    if (run.start >= to) return false;
    out.push_back(run);
    return true;
  });
  return out;
}

std::optional<Tick> PresenceSchedule::earliest_window(Tick ready, Tick length) const {
  std::optional<Tick> found;
  walk_runs(ready, [&](const Interval& run) {
    const Tick d = std::max(ready, run.start);
    if (!run.bounded() || d + length <= run.end) {
      found = d;
      return false;
    }
    // Plain tail occurrences all last `duration`; none of them can fit.
    return !(tail_ && run.start >= tail_->offset && length > tail_->duration);
  });
  return found;
}

PresenceSchedule PresenceSchedule::minus(const Interval& mask) const {
  if (mask.empty()) return *this;
  std::vector<Interval> pieces;
  auto clip = [&](const Interval& run) {
    if (run.end <= mask.start || run.start >= mask.end) {
      pieces.push_back(run);
      return;
    }
    if (run.start < mask.start) pieces.push_back({run.start, mask.start});
    if (mask.bounded() && run.end > mask.end) pieces.push_back({mask.end, run.end});
  };
  for (const auto& iv : intervals_) clip(iv);

  std::optional<PeriodicTail> tail = tail_;
  if (tail_ && mask.end > tail_->offset) {
    if (!mask.bounded()) {
      // Everything from mask.start on disappears; keep the earlier occurrences.
      if (tail_->continuous()) {
        clip({tail_->offset, kForever});
      } else {
        for (Tick i = 0; tail_->occurrence(i).start < mask.start; ++i) clip(tail_->occurrence(i));
      }
      tail.reset();
    } else if (tail_->continuous()) {
      clip({tail_->offset, mask.end});
      tail->offset = mask.end;
    } else {
      // Materialise the occurrences that start before mask.end.
      const Tick span = mask.end - tail_->offset;
      const Tick first_kept = (span + tail_->period - 1) / tail_->period;
      for (Tick i = 0; i < first_kept; ++i) clip(tail_->occurrence(i));
      tail->offset = tail_->occurrence(first_kept).start;
    }
  }
  auto merged = normalize(std::move(pieces));
  return PresenceSchedule(std::move(merged), tail);
}

}  // namespace tvgkit
