#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hemsched/common.hpp"

namespace hemsched {

/// Fixed per-slot energy draw of one appliance run. A job that launches at
/// slot s consumes energy_per_slot[0] at s, energy_per_slot[1] at s+1, ...
/// Runs are non-interruptible; the profile is the whole story.
struct LoadProfile {
    Vec energy_per_slot;

    int duration() const { return static_cast<int>(energy_per_slot.size()); }

    /// Profile value at offset t (1-based); zero outside 1..duration().
    double at(int t) const {
        if (t < 1 || t > duration()) return 0.0;
        return energy_per_slot[static_cast<std::size_t>(t - 1)];
    }

    double total_energy() const {
        return std::accumulate(energy_per_slot.begin(), energy_per_slot.end(), 0.0);
    }

    void validate() const {
        if (energy_per_slot.empty()) throw Error("LoadProfile: empty profile");
        if (energy_per_slot.front() <= 0.0)
            throw Error("LoadProfile: first slot must draw energy");
        for (double g : energy_per_slot)
            if (!(g >= 0.0)) throw Error("LoadProfile: negative entry");
    }
};

/// Cumulative count of customer requests over slots 1..L, plus the per-slot
/// request probabilities used as forecast means. Increments are 0/1: at most
/// one request per slot.
struct ArrivalProcess {
    std::vector<int> counts;  // a(1..L)
    Vec rates;                // alpha(1..L), each in [0,1]

    int horizon() const { return static_cast<int>(counts.size()); }

    /// a(slot) with a(ell) = 0 for ell <= 0.
    int count(int slot) const {
        if (slot <= 0) return 0;
        if (slot > horizon()) slot = horizon();
        return counts[static_cast<std::size_t>(slot - 1)];
    }

    double rate(int slot) const {
        if (slot < 1 || slot > horizon()) return 0.0;
        return rates[static_cast<std::size_t>(slot - 1)];
    }

    void validate() const {
        if (rates.size() != counts.size())
            throw Error("ArrivalProcess: counts/rates length mismatch");
        int prev = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const int inc = counts[i] - prev;
            if (inc != 0 && inc != 1)
                throw Error("ArrivalProcess: increment not in {0,1} at slot " +
                            std::to_string(i + 1));
            prev = counts[i];
            if (!(rates[i] >= 0.0 && rates[i] <= 1.0))
                throw Error("ArrivalProcess: rate outside [0,1] at slot " +
                            std::to_string(i + 1));
        }
    }
};

/// Cumulative count of launched jobs over slots 1..L. Real-valued: the LP
/// relaxation works with fractional launch mass, committed schedules are
/// integer.
struct DepartureProcess {
    Vec counts;  // d(1..L)

    int horizon() const { return static_cast<int>(counts.size()); }

    /// d(slot) with d(ell) = 0 for ell <= 0.
    double count(int slot) const {
        if (slot <= 0) return 0.0;
        if (slot > horizon()) slot = horizon();
        return counts[static_cast<std::size_t>(slot - 1)];
    }

    bool is_integral(double tol = 1e-9) const {
        for (double v : counts)
            if (std::abs(v - std::round(v)) > tol) return false;
        return true;
    }
};

/// One controllable appliance: its run profile and the customer's tolerated
/// launch delay in slots.
struct ApplianceSpec {
    LoadProfile profile;
    int max_delay = 0;  // zeta >= 0

    void validate() const {
        profile.validate();
        if (max_delay < 0) throw Error("ApplianceSpec: negative max_delay");
    }
};

/// A residence: its controllable appliances, the per-slot uncontrollable
/// load, and the per-slot ceiling on total controllable load.
struct Residence {
    std::vector<ApplianceSpec> appliances;
    Vec uncontrollable;   // U(1..L), kWh per slot
    double p_max = 0.0;   // kWh per slot

    void validate() const {
        for (const auto& a : appliances) a.validate();
        for (double u : uncontrollable)
            if (!(u >= 0.0)) throw Error("Residence: negative uncontrollable load");
        if (!(p_max > 0.0)) throw Error("Residence: p_max must be positive");
    }
};

/// Energy injected per slot by an appliance whose launches follow departure
/// process d: the profile convolved with the launch increments,
///   S(ell) = sum_k [d(ell-k+1) - d(ell-k)] * g(k).
/// A launch at slot s therefore draws g(1) at s itself. Profiles of launches
/// near the end of the horizon are truncated at L.
inline Vec load_injection(const LoadProfile& profile, const DepartureProcess& d,
                          int horizon) {
    if (d.horizon() < horizon)
        throw Error("load_injection: departure process shorter than horizon");
    const int G = profile.duration();
    Vec out(static_cast<std::size_t>(horizon), 0.0);
    for (int ell = 1; ell <= horizon; ++ell) {
        double s = 0.0;
        const int kmax = std::min(ell, G);
        for (int k = 1; k <= kmax; ++k)
            s += (d.count(ell - k + 1) - d.count(ell - k)) * profile.at(k);
        out[static_cast<std::size_t>(ell - 1)] = s;
    }
    return out;
}

/// Load when every request launches immediately (d = a).
inline Vec unscheduled_injection(const LoadProfile& profile,
                                 const ArrivalProcess& arrivals, int horizon) {
    DepartureProcess d;
    d.counts.reserve(arrivals.counts.size());
    for (int c : arrivals.counts) d.counts.push_back(static_cast<double>(c));
    return load_injection(profile, d, horizon);
}

/// Launch times of an integer departure process: s_k = min{ell : d(ell) >= k}.
/// The >= (rather than =) makes slots with multiple simultaneous launches
/// yield well-defined, repeated times.
inline std::vector<int> extract_schedule(const DepartureProcess& d) {
    if (!d.is_integral())
        throw Error("extract_schedule: departure process is not integer-valued");
    std::vector<int> launches;
    const int L = d.horizon();
    const int total = static_cast<int>(std::llround(d.count(L)));
    launches.reserve(static_cast<std::size_t>(std::max(total, 0)));
    int k = 1;
    for (int ell = 1; ell <= L && k <= total; ++ell) {
        const auto reached = static_cast<int>(std::llround(d.count(ell)));
        while (k <= reached) {
            launches.push_back(ell);
            ++k;
        }
    }
    return launches;
}

/// Inverse of extract_schedule for a sorted list of launch times.
inline DepartureProcess departure_from_launch_times(const std::vector<int>& launches,
                                                    int horizon) {
    DepartureProcess d;
    d.counts.assign(static_cast<std::size_t>(horizon), 0.0);
    for (int s : launches) {
        if (s < 1 || s > horizon)
            throw Error("departure_from_launch_times: launch outside horizon");
        for (int ell = s; ell <= horizon; ++ell)
            d.counts[static_cast<std::size_t>(ell - 1)] += 1.0;
    }
    return d;
}

/// Draw an arrival realization with independent Bernoulli(alpha_ell)
/// increments. Deterministic for a fixed rng state.
inline ArrivalProcess sample_arrivals(const Vec& rates, Rng& rng) {
    ArrivalProcess a;
    a.rates = rates;
    a.counts.reserve(rates.size());
    int c = 0;
    for (double r : rates) {
        if (!(r >= 0.0 && r <= 1.0))
            throw Error("sample_arrivals: rate outside [0,1]");
        if (detail::bernoulli(rng, r)) ++c;
        a.counts.push_back(c);
    }
    return a;
}

struct FeasibilityViolation {
    int slot = 0;
    std::string what;
};

struct FeasibilityReport {
    std::vector<FeasibilityViolation> violations;

    bool pass() const { return violations.empty(); }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& v : violations)
            os << "slot " << v.slot << ": " << v.what << "\n";
        return os.str();
    }
};

/// Check the scheduling constraints linking a departure process to its
/// arrival process: monotone, never ahead of arrivals, never later than the
/// max delay, everything launched by the end of the horizon. Violations are
/// reported per slot; nothing is thrown.
inline FeasibilityReport check_departure_feasibility(const DepartureProcess& d,
                                                     const ArrivalProcess& a,
                                                     int max_delay, int horizon,
                                                     double tol = 1e-9) {
    FeasibilityReport report;
    auto flag = [&](int slot, const std::string& what) {
        report.violations.push_back({slot, what});
    };
    for (int ell = 1; ell <= horizon; ++ell) {
        const double dv = d.count(ell);
        if (dv < -tol) flag(ell, "d < 0");
        if (d.count(ell - 1) > dv + tol) flag(ell, "d decreasing");
        if (dv > a.count(ell) + tol) flag(ell, "d ahead of arrivals");
        if (a.count(ell - max_delay) > dv + tol)
            flag(ell, "max delay exceeded (a(ell-zeta) > d(ell))");
    }
    if (std::abs(d.count(horizon) - a.count(horizon)) > tol)
        flag(horizon, "d(L) != a(L): pending work at end of horizon");
    return report;
}

}  // namespace hemsched
