#include "padic/shell_series.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "padic/errors.hpp"

namespace padic {

namespace {

constexpr int kDivergenceWindow = 5;
constexpr int kZeroRun = 3;
constexpr std::size_t kRatioWindow = 3;

} // namespace

DirectedSum sum_shells(const std::function<BigRational(long)>& term, long start, int step, long settled_after,
                       const BigRational& tail_tol, long max_terms, const BigRational& ratio_floor)
{
    if (step != 1 && step != -1) throw ArgumentError("shell step must be +1 or -1");
    if (tail_tol.sign() <= 0) throw ArgumentError("tail tolerance must be positive");

    DirectedSum out;
    BigRational previous_abs;
    bool previous_settled = false;
    int non_decreasing = 0;
    int zeros = 0;
    std::deque<BigRational> ratios;

    for (long k = start;; k += step) {
        if (out.terms >= max_terms)
            throw DivergenceError("shell series did not settle within " + std::to_string(max_terms) + " terms");

        const BigRational t = term(k);
        out.value += t;
        out.last = k;
        ++out.terms;

        const bool settled = step > 0 ? k > settled_after : k < settled_after;
        const BigRational magnitude = t.abs();

        if (settled) {
            if (magnitude.is_zero()) {
                if (++zeros >= kZeroRun) {
                    out.tail_bound = BigRational(0);
                    return out;
                }
            } else {
                zeros = 0;
                if (previous_settled && !previous_abs.is_zero()) {
                    const BigRational ratio = magnitude / previous_abs;
                    if (ratio >= BigRational(1)) {
                        if (++non_decreasing >= kDivergenceWindow)
                            throw DivergenceError("shell terms stopped decreasing near shell " + std::to_string(k));
                    } else {
                        non_decreasing = 0;
                    }
                    ratios.push_back(ratio);
                    if (ratios.size() > kRatioWindow) ratios.pop_front();
                    // slowest recent decay, so a component hidden under a faster one still counts
                    const BigRational worst = std::max(*std::max_element(ratios.begin(), ratios.end()), ratio_floor);
                    if (ratios.size() == kRatioWindow && worst < BigRational(1)) {
                        const BigRational tail = magnitude * worst / (BigRational(1) - worst);
                        if (tail < tail_tol) {
                            out.tail_bound = tail;
                            return out;
                        }
                    }
                }
            }
        }
        previous_abs = magnitude;
        previous_settled = settled;
    }
}

} // namespace padic
