#include "window_oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include "qvlab/errors.hpp"

namespace qvlab::oracle {

namespace {

std::size_t rows_of(Window const& w)
{
    return w.rank == 1 ? 1 : static_cast<std::size_t>(2 * w.bound + 1);
}

void check_budget(Window const& w)
{
    if (w.rank != 1 && w.rank != 2)
        throw config_error("window oracle supports ranks 1 and 2 only");
    if (w.bound < 1)
        throw config_error("window bound must be >= 1");
    std::size_t side = static_cast<std::size_t>(2 * w.bound + 1);
    std::size_t size = w.rank == 1 ? side : side * side;
    if (size > w.budget)
        throw config_error("window enumeration exceeds budget");
}

GroupElement point(std::size_t rank, long lead, long last)
{
    return rank == 1 ? GroupElement({last}) : GroupElement({lead, last});
}

void check_margin(Cut const& c, Window const& w)
{
    if (w.bound < 2 * (1 + max_abs_coordinate(c)))
        throw domain_error("window bound too small for " + to_string(c));
}

// Inner-window comparison of a summed set (row counts over [-2W, 2W] leading
// coordinates and last coordinates offset by 2W) with a predicted cut.
WindowVerdict compare_inner(std::vector<long> const& sum_counts, long offset, Cut const& predicted, Window const& w)
{
    WindowVerdict v;
    long inner = w.bound / 2;
    long lead_lo = w.rank == 1 ? 0 : -inner, lead_hi = w.rank == 1 ? 0 : inner;
    for (long lead = lead_lo; lead <= lead_hi; ++lead) {
        long row = w.rank == 1 ? 0 : lead + offset;
        for (long last = -inner; last <= inner; ++last) {
            bool in_sum = last + offset < sum_counts[static_cast<std::size_t>(row)];
            auto g = point(w.rank, lead, last);
            ++v.points_compared;
            if (in_sum != predicted.contains(g)) {
                v.match = false;
                v.first_difference = g;
                return v;
            }
        }
    }
    return v;
}

// Row counts of the elementwise sum of two window sets; rows and columns in
// the doubled box [-2W, 2W].
std::vector<long> minkowski(WindowSet const& a, WindowSet const& b)
{
    auto const& w = a.window();
    std::size_t rows = w.rank == 1 ? 1 : static_cast<std::size_t>(4 * w.bound + 1);
    std::vector<long> out(rows, 0);
    auto const& ca = a.counts();
    auto const& cb = b.counts();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0)
            continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] == 0)
                continue;
            std::size_t r = w.rank == 1 ? 0 : i + j;
            out[r] = std::max(out[r], ca[i] + cb[j] - 1);
        }
    }
    return out;
}

} // namespace

WindowSet::WindowSet(Cut const& cut, Window const& win) : win_(win)
{
    check_budget(win);
    if (cut.rank() != win.rank)
        throw structural_error("cut rank does not match the window");
    auto rows = rows_of(win);
    count_.assign(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        long lead = win.rank == 1 ? 0 : static_cast<long>(r) - win.bound;
        long run = 0;
        bool ended = false;
        for (long last = -win.bound; last <= win.bound; ++last) {
            bool in = cut.contains(point(win.rank, lead, last));
            if (in && ended)
                throw domain_error("left set of " + to_string(cut) + " is not initial inside the window");
            if (in)
                ++run;
            else
                ended = true;
        }
        count_[r] = run;
    }
    // Initial in the lex order: a full row may only follow full rows.
    long full = 2 * win.bound + 1;
    for (std::size_t r = 1; r < rows; ++r)
        if (count_[r] > 0 && count_[r - 1] != full)
            throw domain_error("left set of " + to_string(cut) + " is not initial inside the window");
}

bool WindowSet::contains(long lead, long last) const
{
    std::size_t row = win_.rank == 1 ? 0 : static_cast<std::size_t>(lead + win_.bound);
    return last + win_.bound < count_[row];
}

bool WindowSet::contains(GroupElement const& g) const
{
    return win_.rank == 1 ? contains(0, g[0].get_si()) : contains(g[0].get_si(), g[1].get_si());
}

long max_abs_coordinate(Cut const& c)
{
    if (c.kind() != Cut::Kind::at_most)
        return 0;
    long m = 0;
    for (auto const& x : c.bound().coords())
        m = std::max(m, std::labs(x.get_si()));
    return m;
}

WindowVerdict window_cut_sum(Cut const& a, Cut const& b, Cut const& predicted, Window const& win)
{
    check_margin(a, win);
    check_margin(b, win);
    WindowSet sa(a, win), sb(b, win);
    return compare_inner(minkowski(sa, sb), 2 * win.bound, predicted, win);
}

WindowVerdict window_cut_sum(WindowSet const& a, WindowSet const& b, WindowSet const& predicted)
{
    auto const& w = a.window();
    if (b.window().rank != w.rank || b.window().bound != w.bound || predicted.window().bound != w.bound
        || predicted.window().rank != w.rank)
        throw structural_error("window sets come from different windows");
    auto sum = minkowski(a, b);
    long offset = 2 * w.bound;
    WindowVerdict v;
    long inner = w.bound / 2;
    long lead_lo = w.rank == 1 ? 0 : -inner, lead_hi = w.rank == 1 ? 0 : inner;
    for (long lead = lead_lo; lead <= lead_hi; ++lead) {
        long row = w.rank == 1 ? 0 : lead + offset;
        for (long last = -inner; last <= inner; ++last) {
            ++v.points_compared;
            if ((last + offset < sum[static_cast<std::size_t>(row)]) != predicted.contains(lead, last)) {
                v.match = false;
                v.first_difference = point(w.rank, lead, last);
                return v;
            }
        }
    }
    return v;
}

WindowVerdict window_cut_scale(long n, Cut const& a, Cut const& predicted, Window const& win)
{
    if (n < 1)
        throw domain_error("n must be >= 1");
    check_margin(a, win);
    WindowSet sa(a, win);
    // Repeated sums grow the box; re-restrict to the original window after
    // each step, which is exact on the inner window as long as the
    // partial sums stay within the margin.
    WindowSet acc = sa;
    for (long k = 1; k < n; ++k) {
        auto summed = minkowski(acc, sa);
        std::vector<long> counts(acc.counts().size(), 0);
        long shift = win.bound; // doubled box -> original box
        for (std::size_t r = 0; r < counts.size(); ++r) {
            std::size_t src = win.rank == 1 ? 0 : r + static_cast<std::size_t>(shift);
            long c = summed[src] - shift;
            counts[r] = std::clamp(c, 0L, 2 * win.bound + 1);
        }
        acc = WindowSet(win, counts);
    }
    return compare_inner([&] {
        std::vector<long> doubled(win.rank == 1 ? 1 : static_cast<std::size_t>(4 * win.bound + 1), 0);
        for (std::size_t r = 0; r < acc.counts().size(); ++r) {
            std::size_t dst = win.rank == 1 ? 0 : r + static_cast<std::size_t>(win.bound);
            doubled[dst] = acc.counts()[r] == 0 ? 0 : acc.counts()[r] + win.bound;
        }
        return doubled;
    }(), 2 * win.bound, predicted, win);
}

WindowVerdict window_cut_translate(Cut const& a, GroupElement const& alpha, Cut const& predicted, Window const& win)
{
    check_margin(a, win);
    WindowSet sa(a, win);
    WindowVerdict v;
    long inner = win.bound / 2;
    long lead_lo = win.rank == 1 ? 0 : -inner, lead_hi = win.rank == 1 ? 0 : inner;
    for (long lead = lead_lo; lead <= lead_hi; ++lead)
        for (long last = -inner; last <= inner; ++last) {
            auto g = point(win.rank, lead, last);
            auto shifted = g + alpha; // g in A - alpha iff g + alpha in A
            bool inside = true;
            for (auto const& c : shifted.coords())
                inside = inside && std::labs(c.get_si()) <= win.bound;
            if (!inside)
                throw domain_error("translation leaves the window; enlarge it");
            ++v.points_compared;
            if (sa.contains(shifted) != predicted.contains(g)) {
                v.match = false;
                v.first_difference = g;
                return v;
            }
        }
    return v;
}

std::optional<int> window_inclusion(Cut const& a, Cut const& b, Window const& win)
{
    WindowSet sa(a, win), sb(b, win);
    bool a_in_b = true, b_in_a = true;
    for (std::size_t r = 0; r < sa.counts().size(); ++r) {
        a_in_b = a_in_b && sa.counts()[r] <= sb.counts()[r];
        b_in_a = b_in_a && sb.counts()[r] <= sa.counts()[r];
    }
    if (a_in_b && b_in_a)
        return 0;
    if (a_in_b)
        return -1;
    if (b_in_a)
        return 1;
    return std::nullopt;
}

std::vector<Cut> enumerate_descriptors(std::size_t rank, long limit)
{
    std::vector<Cut> out{Cut::bottom(rank), Cut::top(rank)};
    for (std::size_t level = 0; level < rank; ++level) {
        std::size_t m = rank - level;
        std::vector<long> coords(m, -limit);
        for (;;) {
            std::vector<Integer> c(coords.begin(), coords.end());
            out.push_back(Cut::at_most(level, GroupElement(std::move(c))));
            std::size_t i = 0;
            while (i < m && coords[i] == limit)
                coords[i++] = -limit;
            if (i == m)
                break;
            ++coords[i];
        }
    }
    return out;
}

} // namespace qvlab::oracle
