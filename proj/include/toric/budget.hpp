// Copyright 2026 The toric authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIC_BUDGET_HPP
#define TORIC_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <memory>
#include <optional>

namespace toric {

/// Cooperative cancellation token: an optional wall-clock deadline plus a
/// flag that may be signalled from another thread. Long-running loops poll
/// expired() between reduction steps.
class Budget {
  public:
    using Clock = std::chrono::steady_clock;

    Budget() : flag_(std::make_shared<std::atomic<bool>>(false)) {}

    static Budget unlimited() { return Budget(); }

    /// Deadline the given number of seconds from now; non-positive means none.
    static Budget after(double seconds) {
        Budget b;
        if (seconds > 0)
            b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(seconds));
        return b;
    }

    /// A child budget sharing this token's flag, additionally capped at
    /// now + seconds (non-positive seconds adds no cap).
    Budget capped(double seconds) const {
        Budget b = *this;
        if (seconds > 0) {
            auto d = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(seconds));
            if (!b.deadline_ || d < *b.deadline_) b.deadline_ = d;
        }
        return b;
    }

    void cancel() const { flag_->store(true, std::memory_order_relaxed); }

    bool expired() const {
        if (flag_->load(std::memory_order_relaxed)) return true;
        return deadline_ && Clock::now() > *deadline_;
    }

    bool limited() const { return deadline_.has_value(); }

  private:
    std::shared_ptr<std::atomic<bool>> flag_;
    std::optional<Clock::time_point> deadline_;
};

}  // namespace toric

#endif  // TORIC_BUDGET_HPP
