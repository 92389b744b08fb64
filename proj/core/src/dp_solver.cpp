#include "icsched/dp_solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <tuple>

#include "icsched/analysis.hpp"
#include "icsched/errors.hpp"
#include "icsched/validate.hpp"
#include "icsched/verify.hpp"

namespace ics {

namespace {

constexpr std::int64_t kBudgetCeiling = std::int64_t{1} << 62;

struct Key {
    Time t;
    std::uint64_t mask;  // subset of the block's live jobs, bit k = k-th live job
    std::uint64_t code;  // mixed-radix packed idle offsets, digit i = b_i + ell

    friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        };
        std::uint64_t h = mix(static_cast<std::uint64_t>(k.t));
        h = mix(h ^ k.mask);
        h = mix(h ^ k.code);
        return static_cast<std::size_t>(h);
    }
};

enum class Rule : std::uint8_t { Base, ChainDown, Place };

struct RuleEntry {
    std::uint8_t value = 0;
    Rule rule = Rule::Base;
    std::int32_t job = -1;      // job index, Place only
    std::int32_t machine = -1;  // 0-based machine, Place only
    Time finish_offset = 0;     // Place: job finishes at t + finish_offset
};

// Open-addressing memo (insert-only). The table is the solver's hot path;
// node-based maps dominate the runtime at these state counts.
template <typename V>
class FlatMap {
  public:
    FlatMap() { rehash(1024); }

    const V* find(const Key& k) const {
        for (std::size_t i = probe(k);; i = (i + 1) & mask_) {
            const Slot& s = slots_[i];
            if (!s.used) return nullptr;
            if (s.key == k) return &s.value;
        }
    }

    void insert(const Key& k, const V& v) {
        if ((count_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
        for (std::size_t i = probe(k);; i = (i + 1) & mask_) {
            Slot& s = slots_[i];
            if (!s.used) {
                s.used = true;
                s.key = k;
                s.value = v;
                ++count_;
                return;
            }
            if (s.key == k) return;  // already known; values always agree
        }
    }

    std::uint64_t size() const { return count_; }

  private:
    struct Slot {
        Key key{};
        V value{};
        bool used = false;
    };

    std::size_t probe(const Key& k) const { return KeyHash{}(k)&mask_; }

    void rehash(std::size_t capacity) {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(capacity, Slot{});
        mask_ = capacity - 1;
        count_ = 0;
        for (const Slot& s : old)
            if (s.used) insert(s.key, s.value);
    }

    std::vector<Slot> slots_;
    std::size_t mask_ = 0;
    std::uint64_t count_ = 0;
};

// Live-set blocks: S_t is constant between consecutive event times.
struct Block {
    Time start = 0;
    std::vector<std::int32_t> live;      // job indices, ascending (== id order)
    std::uint64_t released_at_start = 0; // bits of `live` with release == start
    // bit groups of `live` sharing one twin class (identical jobs), for the
    // decide-mode subset canonicalization; only groups of size >= 2 listed
    std::vector<std::uint64_t> twin_groups;
};

}  // namespace

struct DpTable::Impl {
    std::vector<Job> jobs;  // sorted by id
    int m = 1;
    Time ell = 0;
    Time tmax = 0;
    std::int64_t height = 0;
    bool record = false;
    bool empty_instance = false;
    unsigned __int128 projected = 1;

    std::uint64_t radix = 1;
    std::vector<std::uint64_t> pow;  // radix^i
    std::vector<Block> blocks;
    std::vector<std::int32_t> by_deadline;       // job indices sorted by deadline
    std::vector<Time> due_release_max;           // prefix max release over by_deadline
    std::vector<std::int32_t> twin;  // index of the first job with same (t, d, p)

    FlatMap<std::uint8_t> plain;
    FlatMap<RuleEntry> rules;

    Impl(const Instance& instance, const SolveOptions& options);

    // --- state packing -----------------------------------------------------
    Time digit(std::uint64_t code, int i) const {
        return static_cast<Time>((code / pow[static_cast<std::size_t>(i)]) % radix) - ell;
    }
    std::uint64_t with_digit(std::uint64_t code, int i, Time value) const {
        const std::uint64_t p = pow[static_cast<std::size_t>(i)];
        const std::uint64_t old = (code / p) % radix;
        return code - old * p + static_cast<std::uint64_t>(value + ell) * p;
    }
    std::uint64_t saturated_code() const {  // every offset at +ell
        std::uint64_t code = 0;
        for (int i = 0; i < m; ++i) code = with_digit(code, i, ell);
        return code;
    }

    // --- live-set lookup ----------------------------------------------------
    const Block* block_of(Time t) const {
        // last block with start <= t; nullptr before the first event
        auto it = std::upper_bound(blocks.begin(), blocks.end(), t,
                                   [](Time v, const Block& b) { return v < b.start; });
        if (it == blocks.begin()) return nullptr;
        return &*(it - 1);
    }
    static int bit_of(const Block& b, std::int32_t job_index) {
        const auto it = std::lower_bound(b.live.begin(), b.live.end(), job_index);
        assert(it != b.live.end() && *it == job_index);
        return static_cast<int>(it - b.live.begin());
    }

    // --- memo ---------------------------------------------------------------
    std::uint64_t entries() const {
        return record ? rules.size() : plain.size();
    }
    const RuleEntry* find_rule(const Key& k) const { return rules.find(k); }
    int lookup(const Key& k) const {
        if (record) {
            const RuleEntry* e = rules.find(k);
            return e == nullptr ? -1 : e->value;
        }
        const std::uint8_t* v = plain.find(k);
        return v == nullptr ? -1 : *v;
    }
    void store(const Key& k, const RuleEntry& e) {
        if (record)
            rules.insert(k, e);
        else
            plain.insert(k, e.value);
    }

    // --- evaluation ---------------------------------------------------------
    // Identical machines: the table value is invariant under permuting the
    // offset vector. Decide-only tables keep offsets sorted descending, which
    // collapses permutation-equivalent states; witness tables stay literal so
    // Place rules name real machines.
    std::uint64_t canonical_code(std::uint64_t code) const {
        Time digits[64];
        for (int i = 0; i < m; ++i) digits[i] = digit(code, i);
        std::sort(digits, digits + m, std::greater<Time>());
        std::uint64_t out = 0;
        for (int i = 0; i < m; ++i) out = with_digit(out, i, digits[i]);
        return out;
    }
    // Identical jobs are interchangeable too: within each twin group, only
    // how many copies remain matters, so the set bits move to the group's
    // low end (decide mode only).
    std::uint64_t canonical_mask(std::uint64_t mask, const Block& blk) const {
        for (const std::uint64_t group : blk.twin_groups) {
            const int present = std::popcount(mask & group);
            std::uint64_t keep = 0;
            std::uint64_t rest = group;
            for (int k = 0; k < present; ++k) {
                keep |= rest & (~rest + 1);  // lowest set bit
                rest &= rest - 1;
            }
            mask = (mask & ~group) | keep;
        }
        return mask;
    }
    Key canonical(Key k) const {
        k.code = canonical_code(k.code);
        if (k.mask != 0)
            if (const Block* blk = block_of(k.t)) k.mask = canonical_mask(k.mask, *blk);
        return k;
    }
    Key chain_target(const Key& k) const;
    int eval(Key k);
};

DpTable::Impl::Impl(const Instance& instance, const SolveOptions& options) {
    const ValidationReport report = validate(instance);
    for (const auto& v : report.violations)
        if (v.kind != Violation::Kind::WindowTooShort)
            throw std::invalid_argument("invalid instance: " + v.message);

    m = instance.machines;
    record = options.witness;
    jobs = instance.jobs;
    std::sort(jobs.begin(), jobs.end(),
              [](const Job& a, const Job& b) { return a.id < b.id; });

    if (jobs.empty()) {
        empty_instance = true;
        return;
    }

    const InstanceProfile p = profile(instance);
    ell = p.ell;
    tmax = p.t_max;
    height = p.height;

    // Projected table size (t_max+1) * 2^h * (2*ell+1)^m, saturating.
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 100;
    projected = static_cast<unsigned __int128>(tmax) + 1;
    for (std::int64_t i = 0; i < height && projected < limit; ++i) projected *= 2;
    for (int i = 0; i < m && projected < limit; ++i)
        projected *= static_cast<unsigned __int128>(2 * ell + 1);
    const std::int64_t budget = std::clamp<std::int64_t>(options.budget, 1, kBudgetCeiling);
    if (projected > static_cast<unsigned __int128>(budget))
        throw BudgetError("budget exceeded: projected DP states > " +
                          std::to_string(budget));
    // budget <= 2^62 caps every factor, so offset codes fit in 64 bits and
    // live sets fit in a 64-bit mask from here on.

    radix = static_cast<std::uint64_t>(2 * ell + 1);
    pow.resize(static_cast<std::size_t>(m) + 1);
    pow[0] = 1;
    for (int i = 0; i < m; ++i)
        pow[static_cast<std::size_t>(i) + 1] = pow[static_cast<std::size_t>(i)] * radix;

    // Event blocks.
    std::vector<Time> events;
    events.reserve(2 * jobs.size());
    for (const Job& j : jobs) {
        events.push_back(j.release);
        events.push_back(j.deadline);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    blocks.reserve(events.size());
    for (const Time start : events) {
        Block b;
        b.start = start;
        for (std::size_t i = 0; i < jobs.size(); ++i)
            if (jobs[i].release <= start && start < jobs[i].deadline)
                b.live.push_back(static_cast<std::int32_t>(i));
        for (std::size_t bit = 0; bit < b.live.size(); ++bit)
            if (jobs[static_cast<std::size_t>(b.live[bit])].release == start)
                b.released_at_start |= std::uint64_t{1} << bit;
        blocks.push_back(std::move(b));
    }

    by_deadline.resize(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) by_deadline[i] = static_cast<std::int32_t>(i);
    std::sort(by_deadline.begin(), by_deadline.end(), [&](std::int32_t a, std::int32_t b) {
        return jobs[static_cast<std::size_t>(a)].deadline < jobs[static_cast<std::size_t>(b)].deadline;
    });
    due_release_max.resize(jobs.size());
    Time running_max = -1;
    for (std::size_t k = 0; k < by_deadline.size(); ++k) {
        running_max = std::max(running_max, jobs[static_cast<std::size_t>(by_deadline[k])].release);
        due_release_max[k] = running_max;
    }

    // Twin classes: identical (release, deadline, processing) jobs are
    // interchangeable, so placements only ever try the first of each class.
    twin.resize(jobs.size());
    std::vector<std::int32_t> order(jobs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        const Job &ja = jobs[static_cast<std::size_t>(a)], &jb = jobs[static_cast<std::size_t>(b)];
        return std::tie(ja.release, ja.deadline, ja.processing, a) <
               std::tie(jb.release, jb.deadline, jb.processing, b);
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Job& prev = k ? jobs[static_cast<std::size_t>(order[k - 1])] : Job{};
        const Job& cur = jobs[static_cast<std::size_t>(order[k])];
        if (k > 0 && prev.release == cur.release && prev.deadline == cur.deadline &&
            prev.processing == cur.processing)
            twin[static_cast<std::size_t>(order[k])] = twin[static_cast<std::size_t>(order[k - 1])];
        else
            twin[static_cast<std::size_t>(order[k])] = order[k];
    }

    for (Block& b : blocks) {
        std::vector<std::pair<std::int32_t, std::uint64_t>> groups;  // class rep -> bits
        for (std::size_t bit = 0; bit < b.live.size(); ++bit) {
            const std::int32_t rep = twin[static_cast<std::size_t>(b.live[bit])];
            bool found = false;
            for (auto& [r, bits] : groups)
                if (r == rep) {
                    bits |= std::uint64_t{1} << bit;
                    found = true;
                }
            if (!found) groups.emplace_back(rep, std::uint64_t{1} << bit);
        }
        for (const auto& [rep, bits] : groups)
            if (std::popcount(bits) >= 2) b.twin_groups.push_back(bits);
    }
}

// Rule ChainDown. One step of the shift case moves (t, S, b) to
// (t-1, S + dues(t), min(b+1, ell)), where dues(t) are the jobs with
// deadline exactly t. Steps repeat until some job of the accumulated set was
// released exactly at the current time (or time 0 is hit); every
// intermediate state has the same value, so the whole run is taken in one
// jump to the first such blocking time.
Key DpTable::Impl::chain_target(const Key& k) const {
    const Block* cur = block_of(k.t);

    // Last deadline-sorted position with deadline <= t.
    const auto due_end = std::upper_bound(
        by_deadline.begin(), by_deadline.end(), k.t, [&](Time v, std::int32_t j) {
            return v < jobs[static_cast<std::size_t>(j)].deadline;
        });

    // Blocking time: the latest release among the carried subset and every
    // job already due by t (all of which join the set before their release
    // time is reached).
    Time target = -1;
    if (due_end != by_deadline.begin())
        target = due_release_max[static_cast<std::size_t>(due_end - by_deadline.begin()) - 1];
    if (k.mask != 0) {
        assert(cur != nullptr);
        for (std::size_t bit = 0; bit < cur->live.size(); ++bit)
            if (k.mask & (std::uint64_t{1} << bit))
                target = std::max(target, jobs[static_cast<std::size_t>(cur->live[bit])].release);
    }
    target = std::max<Time>(target, 0);
    assert(target < k.t);

    // Set at the target time: S plus every job with deadline in (target, t].
    std::uint64_t mask = 0;
    const Block* dest = block_of(target);
    if (k.mask != 0) {
        for (std::size_t bit = 0; bit < cur->live.size(); ++bit)
            if (k.mask & (std::uint64_t{1} << bit))
                mask |= std::uint64_t{1} << bit_of(*dest, cur->live[bit]);
    }
    for (auto it = by_deadline.begin(); it != due_end; ++it)
        if (jobs[static_cast<std::size_t>(*it)].deadline > target)
            mask |= std::uint64_t{1} << bit_of(*dest, *it);

    const Time steps = k.t - target;
    std::uint64_t code = k.code;
    for (int i = 0; i < m; ++i) {
        const Time b = digit(code, i);
        if (b < ell) code = with_digit(code, i, std::min(b + steps, ell));
    }
    return Key{target, mask, code};
}

int DpTable::Impl::eval(Key key) {
    std::vector<Key> chain;  // states resolved by the pending ChainDown run
    int result = -1;

    if (!record) key = canonical(key);
    for (;;) {
        if (const int hit = lookup(key); hit >= 0) {
            result = hit;
            break;
        }
        if (key.t == 0 && key.mask == 0) {  // base row
            store(key, RuleEntry{1, Rule::Base, -1, -1, 0});
            result = 1;
            break;
        }

        const Block* blk = block_of(key.t);
        const std::uint64_t released =
            (blk != nullptr && blk->start == key.t) ? (blk->released_at_start & key.mask) : 0;

        if (key.t >= 1 && released == 0) {
            chain.push_back(key);
            key = chain_target(key);
            if (!record) key = canonical(key);
            continue;
        }

        // Placement case: job j finishes at t + c on machine i, then the
        // machine is idle from t + c - p_j.
        assert(blk != nullptr);
        RuleEntry entry{0, Rule::Place, -1, -1, 0};
        std::vector<std::int32_t> tried_twins;  // interchangeable jobs: first only
        for (std::size_t bit = 0; bit < blk->live.size() && entry.value == 0; ++bit) {
            if (!(key.mask & (std::uint64_t{1} << bit))) continue;
            const std::int32_t j = blk->live[bit];
            const Job& job = jobs[static_cast<std::size_t>(j)];

            const std::int32_t rep = twin[static_cast<std::size_t>(j)];
            if (std::find(tried_twins.begin(), tried_twins.end(), rep) != tried_twins.end())
                continue;
            tried_twins.push_back(rep);

            for (int i = 0; i < m && entry.value == 0; ++i) {
                const Time b_i = digit(key.code, i);
                bool duplicate = false;  // identical machines: equal offsets collapse
                for (int i2 = 0; i2 < i && !duplicate; ++i2)
                    duplicate = digit(key.code, i2) == b_i;
                if (duplicate) continue;

                const Time hi = std::min(b_i, job.deadline - key.t);
                const Time lo = std::max<Time>(1, job.processing - (key.t - job.release));
                for (Time c = hi; c >= lo; --c) {
                    const Key child{key.t, key.mask & ~(std::uint64_t{1} << bit),
                                    with_digit(key.code, i, c - job.processing)};
                    if (eval(child) == 1) {
                        entry = RuleEntry{1, Rule::Place, j, i, c};
                        break;
                    }
                }
            }
        }
        store(key, entry);
        result = entry.value;
        break;
    }

    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        store(*it, RuleEntry{static_cast<std::uint8_t>(result), Rule::ChainDown, -1, -1, 0});
    return result;
}

DpTable::DpTable(const Instance& instance, const SolveOptions& options)
    : impl_(std::make_unique<Impl>(instance, options)) {}
DpTable::DpTable(DpTable&&) noexcept = default;
DpTable& DpTable::operator=(DpTable&&) noexcept = default;
DpTable::~DpTable() = default;

int DpTable::entry(const DpState& state) {
    Impl& im = *impl_;
    if (state.idle_offsets.size() != static_cast<std::size_t>(im.m))
        throw std::invalid_argument("idle_offsets must have one entry per machine");
    if (im.empty_instance) {
        if (!state.live_jobs.empty())
            throw std::invalid_argument("live_jobs not live at t");
        return 1;  // nothing due, nothing live
    }
    for (const Time b : state.idle_offsets)
        if (b < -im.ell || b > im.ell)
            throw std::invalid_argument("idle offset outside [-ell, ell]");

    const Block* blk = im.block_of(state.t);
    std::uint64_t mask = 0;
    for (const JobId id : state.live_jobs) {
        const auto it = std::lower_bound(
            im.jobs.begin(), im.jobs.end(), id,
            [](const Job& j, JobId v) { return j.id < v; });
        if (it == im.jobs.end() || it->id != id ||
            !(it->release <= state.t && state.t < it->deadline))
            throw std::invalid_argument("live_jobs contains a job not live at t");
        const auto index = static_cast<std::int32_t>(it - im.jobs.begin());
        mask |= std::uint64_t{1} << Impl::bit_of(*blk, index);
    }
    std::uint64_t code = 0;
    for (int i = 0; i < im.m; ++i) code = im.with_digit(code, i, state.idle_offsets[static_cast<std::size_t>(i)]);
    return im.eval(Key{state.t, mask, code});
}

Outcome DpTable::decide_root() {
    Impl& im = *impl_;
    if (im.empty_instance) return Outcome::Feasible;
    const Block* blk = im.block_of(im.tmax);
    assert(blk != nullptr);
    const std::uint64_t mask = blk->live.size() >= 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << blk->live.size()) - 1;
    return im.eval(Key{im.tmax, mask, im.saturated_code()}) == 1 ? Outcome::Feasible
                                                                 : Outcome::Infeasible;
}

std::optional<Schedule> DpTable::extract_schedule() {
    Impl& im = *impl_;
    if (im.empty_instance) return Schedule{};
    if (!im.record) return std::nullopt;

    const Block* blk = im.block_of(im.tmax);
    const std::uint64_t mask = blk->live.size() >= 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << blk->live.size()) - 1;
    Key key{im.tmax, mask, im.saturated_code()};
    const RuleEntry* entry = im.find_rule(key);
    if (entry == nullptr || entry->value != 1) return std::nullopt;

    Schedule schedule;
    while (true) {
        entry = im.find_rule(key);
        assert(entry != nullptr && entry->value == 1);
        if (entry->rule == Rule::Base) break;
        if (entry->rule == Rule::ChainDown) {
            key = im.chain_target(key);
            continue;
        }
        const Job& job = im.jobs[static_cast<std::size_t>(entry->job)];
        schedule.placements.push_back(
            {job.id, entry->machine + 1, key.t + entry->finish_offset - job.processing});
        const Block* b = im.block_of(key.t);
        key.mask &= ~(std::uint64_t{1} << Impl::bit_of(*b, entry->job));
        key.code = im.with_digit(key.code, entry->machine,
                                 entry->finish_offset - job.processing);
    }
    return schedule;
}

DpState DpTable::root_state() const {
    const Impl& im = *impl_;
    DpState s;
    s.t = im.tmax;
    s.idle_offsets.assign(static_cast<std::size_t>(im.m), im.ell);
    if (!im.empty_instance) {
        const Block* blk = im.block_of(im.tmax);
        for (const std::int32_t j : blk->live) s.live_jobs.push_back(im.jobs[static_cast<std::size_t>(j)].id);
    }
    return s;
}

std::vector<JobId> DpTable::live_jobs_at(Time t) const {
    const Impl& im = *impl_;
    std::vector<JobId> out;
    if (im.empty_instance) return out;
    if (const Block* blk = im.block_of(t))
        for (const std::int32_t j : blk->live) out.push_back(im.jobs[static_cast<std::size_t>(j)].id);
    return out;
}

std::uint64_t DpTable::memo_entries() const { return impl_->entries(); }
bool DpTable::within_state_bound() const {
    return static_cast<unsigned __int128>(impl_->entries()) <= impl_->projected;
}
Time DpTable::t_max() const { return impl_->tmax; }
Time DpTable::ell() const { return impl_->ell; }
std::int64_t DpTable::height() const { return impl_->height; }
int DpTable::machines() const { return impl_->m; }

SolveReport decide(const Instance& instance, const SolveOptions& options) {
    SolveReport report;

    const ValidationReport validation = validate(instance);
    for (const auto& v : validation.violations)
        if (v.kind != Violation::Kind::WindowTooShort)
            throw std::invalid_argument("invalid instance: " + v.message);
    if (validation.has_window_too_short()) {
        report.outcome = Outcome::Infeasible;  // some job cannot fit its window
        return report;
    }
    if (instance.jobs.empty()) {
        report.outcome = Outcome::Feasible;
        if (options.witness) report.schedule = Schedule{};
        return report;
    }

    report.outcome = Outcome::Feasible;
    Schedule merged;
    for (const Instance& part : split_at_gaps(instance)) {
        // Shift the part to start at 0 (the answer is shift-invariant) and
        // never use more machines than it has jobs.
        Instance shifted = part;
        Time offset = shifted.jobs.front().release;
        for (const Job& j : shifted.jobs) offset = std::min(offset, j.release);
        for (Job& j : shifted.jobs) {
            j.release -= offset;
            j.deadline -= offset;
        }
        shifted.machines = static_cast<int>(std::min<std::int64_t>(
            shifted.machines, static_cast<std::int64_t>(shifted.jobs.size())));

        DpTable table(shifted, options);
        report.stats.dp_invoked = true;
        const Outcome part_outcome = table.decide_root();

        report.stats.parts.push_back({table.t_max(), table.ell(), table.height(),
                                      table.machines(), table.memo_entries(),
                                      table.within_state_bound()});
        report.stats.memo_entries += table.memo_entries();

        if (part_outcome == Outcome::Infeasible) {
            report.outcome = Outcome::Infeasible;
            break;  // every part must be feasible
        }
        if (options.witness) {
            auto schedule = table.extract_schedule();
            assert(schedule.has_value());
            for (Placement& p : schedule->placements) p.start += offset;
            merged.placements.insert(merged.placements.end(),
                                     schedule->placements.begin(),
                                     schedule->placements.end());
        }
    }

    if (report.outcome == Outcome::Feasible && options.witness) {
        assert(verify_schedule(instance, merged));
        report.schedule = std::move(merged);
    }
    return report;
}

std::optional<Schedule> solve_with_witness(const Instance& instance, SolveOptions options) {
    options.witness = true;
    return decide(instance, options).schedule;
}

}  // namespace ics
