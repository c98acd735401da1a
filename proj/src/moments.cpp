#include "conifold/moments.hpp"

#include "conifold/errors.hpp"
#include "conifold/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace conifold {

namespace {

// Exponent vectors of every power up to kmax are packed into one signed
// 64-bit key using balanced mixed-radix digits. The map is additive, so a
// product of monomials is a sum of keys, and it preserves the
// lexicographic order (last coordinate most significant), so shifting a
// sorted list keeps it sorted.
class KeyPacker {
public:
    KeyPacker(const LaurentPolynomial& w, int kmax)
    {
        const std::size_t d = static_cast<std::size_t>(w.dimension());
        strides_.resize(d);
        __int128 stride = 1;
        for (std::size_t i = 0; i < d; ++i) {
            long long extent = 0;
            for (const auto& n : w.exponents())
                extent = std::max<long long>(extent, std::llabs(n[i]));
            strides_[i] = static_cast<long long>(stride);
            stride *= 2 * static_cast<__int128>(extent) * std::max(kmax, 1) + 1;
            if (stride > (static_cast<__int128>(1) << 62))
                throw Error(ErrorCode::TermBudgetExceeded, "exponent range of W^kmax is too large to index");
        }
    }

    long long pack(const Exponent& n) const
    {
        long long key = 0;
        for (std::size_t i = 0; i < n.size(); ++i)
            key += n[i] * strides_[i];
        return key;
    }

private:
    std::vector<long long> strides_;
};

struct Entry {
    long long key = 0;
    BigInt coefficient;
};

// out = p * w, with p and out sorted by key. `out_size` elements of `out`
// are live afterwards; storage is reused between calls.
void multiply(const std::vector<Entry>& p, std::size_t p_size, const std::vector<long long>& shifts,
              const std::vector<BigInt>& coefficients, std::vector<Entry>& out, std::size_t& out_size)
{
    const std::size_t m = shifts.size();
    std::vector<std::size_t> cursor(m, 0);
    out_size = 0;
    while (true) {
        long long best = std::numeric_limits<long long>::max();
        bool any = false;
        for (std::size_t t = 0; t < m; ++t) {
            if (cursor[t] < p_size) {
                const long long key = p[cursor[t]].key + shifts[t];
                if (!any || key < best) {
                    best = key;
                    any = true;
                }
            }
        }
        if (!any)
            break;
        if (out_size == out.size())
            out.emplace_back();
        Entry& slot = out[out_size++];
        slot.key = best;
        slot.coefficient = 0;
        for (std::size_t t = 0; t < m; ++t) {
            if (cursor[t] < p_size && p[cursor[t]].key + shifts[t] == best) {
                mpz_addmul(slot.coefficient.get_mpz_t(), p[cursor[t]].coefficient.get_mpz_t(),
                           coefficients[t].get_mpz_t());
                ++cursor[t];
            }
        }
    }
}

double log_ratio_root(const Rational& num, const Rational& den, double k)
{
    return std::exp((log_abs(num) - log_abs(den)) / k);
}

}  // namespace

double predicted_term_count(const LaurentPolynomial& w, int kmax)
{
    long long diameter = 0;
    for (int i = 0; i < w.dimension(); ++i) {
        int lo = std::numeric_limits<int>::max();
        int hi = std::numeric_limits<int>::min();
        for (const auto& n : w.exponents()) {
            lo = std::min(lo, n[i]);
            hi = std::max(hi, n[i]);
        }
        diameter = std::max<long long>(diameter, static_cast<long long>(hi) - lo);
    }
    return std::pow(static_cast<double>(kmax) * static_cast<double>(diameter) + 1.0, w.dimension());
}

MomentSequence moment_sequence(const LaurentPolynomial& w, int kmax, const MomentOptions& opts)
{
    if (kmax < 0)
        throw Error(ErrorCode::InvalidInput, "kmax must be non-negative");
    const double predicted = predicted_term_count(w, kmax);
    if (predicted > opts.term_budget)
        throw Error(ErrorCode::TermBudgetExceeded,
                    "W^" + std::to_string(kmax) + " is predicted to have " + std::to_string(predicted)
                        + " terms, above the budget of " + std::to_string(opts.term_budget));

    // W = W_int / D with integer coefficients.
    BigInt denominator = 1;
    for (const auto& [n, a] : w.terms())
        mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), a.get_den_mpz_t());

    KeyPacker packer(w, kmax);
    std::vector<std::pair<long long, BigInt>> packed;
    for (const auto& [n, a] : w.terms())
        packed.emplace_back(packer.pack(n), BigInt(a.get_num() * (denominator / a.get_den())));
    std::sort(packed.begin(), packed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<long long> shifts;
    std::vector<BigInt> coefficients;
    for (auto& [key, c] : packed) {
        shifts.push_back(key);
        coefficients.push_back(std::move(c));
    }

    MomentSequence seq;
    seq.kmax = kmax;
    seq.values.reserve(static_cast<std::size_t>(kmax) + 1);

    std::vector<Entry> current(1);
    current[0].key = 0;
    current[0].coefficient = 1;
    std::size_t current_size = 1;
    std::vector<Entry> next;
    std::size_t next_size = 0;
    BigInt scale = 1;  // D^k

    for (int k = 0;; ++k) {
        auto zero = std::lower_bound(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(current_size),
                                     0LL, [](const Entry& e, long long key) { return e.key < key; });
        Rational moment = 0;
        if (zero != current.begin() + static_cast<std::ptrdiff_t>(current_size) && zero->key == 0)
            moment = Rational(zero->coefficient, scale);
        moment.canonicalize();
        if (sgn(moment) != 0)
            seq.support.push_back(k);
        seq.values.push_back(std::move(moment));
        if (k == kmax)
            break;
        multiply(current, current_size, shifts, coefficients, next, next_size);
        std::swap(current, next);
        std::swap(current_size, next_size);
        scale *= denominator;
    }

    const SupportValidation validation = validate_support(w);
    if (validation.origin_interior)
        seq.period = nonvanishing_certificate(validation).period;
    return seq;
}

std::vector<double> period_ratios(const MomentSequence& seq)
{
    std::vector<double> ratios;
    if (!seq.period)
        return ratios;
    const long period = *seq.period;
    for (long k = period; k <= seq.kmax; k += period) {
        const auto& hi = seq.values[static_cast<std::size_t>(k)];
        const auto& lo = seq.values[static_cast<std::size_t>(k - period)];
        if (sgn(hi) == 0 || sgn(lo) == 0)
            continue;
        ratios.push_back(log_ratio_root(hi, lo, static_cast<double>(period)));
    }
    return ratios;
}

double growth_estimate(const MomentSequence& seq)
{
    if (seq.support.size() < 10)
        throw Error(ErrorCode::InsufficientData, "only " + std::to_string(seq.support.size())
                                                     + " nonzero moments; need at least 10");
    if (seq.period) {
        const long period = *seq.period;
        for (auto it = seq.support.rbegin(); it != seq.support.rend(); ++it) {
            const long hi = *it;
            const long lo = hi - period;
            if (lo < 0)
                break;
            if (std::binary_search(seq.support.begin(), seq.support.end(), static_cast<int>(lo)))
                return log_ratio_root(seq.values[static_cast<std::size_t>(hi)],
                                      seq.values[static_cast<std::size_t>(lo)], static_cast<double>(period));
        }
    }
    const int last = seq.support.back();
    return std::exp(log_abs(seq.values[static_cast<std::size_t>(last)]) / last);
}

DkReport dk_report(const LaurentPolynomial& w, int kmax, const SolverOptions& solver, const MomentOptions& opts)
{
    return dk_report(w, moment_sequence(w, kmax, opts), solver);
}

DkReport dk_report(const LaurentPolynomial& w, const MomentSequence& seq, const SolverOptions& solver)
{
    const ConifoldReport conifold = find_conifold_point(w, solver);
    DkReport out;
    out.kmax = seq.kmax;
    out.critical_value = conifold.critical_value;
    out.estimate = growth_estimate(seq);
    out.relative_gap = std::fabs(out.estimate - out.critical_value) / out.critical_value;
    out.radius = 1.0 / out.critical_value;
    return out;
}

std::string moments_csv(const MomentSequence& seq)
{
    std::ostringstream out;
    out << "k,M_k\n";
    for (std::size_t k = 0; k < seq.values.size(); ++k)
        out << k << ',' << to_string(seq.values[k]) << '\n';
    return out.str();
}

}  // namespace conifold
