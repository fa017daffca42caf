#include "ddfkit/lfsr.hpp"

#include <algorithm>

#include "ddfkit/numbers.hpp"

namespace ddfkit {

LfsrSpec::LfsrSpec(Field f, std::vector<int> taps_) : field(std::move(f)), taps(std::move(taps_)) {
    if (taps.empty()) fail(ErrorKind::InvalidArgument, "LFSR needs at least one stage");
    for (int c : taps)
        if (c < 0 || c >= field.size())
            fail(ErrorKind::ElementOutOfRange, "tap is not an element index");
}

Poly characteristic_poly(const LfsrSpec& spec) {
    std::vector<int> coeffs(spec.order() + 1);
    for (int i = 0; i < spec.order(); ++i) coeffs[i] = spec.field.neg(spec.taps[i]);
    coeffs[spec.order()] = 1;
    return Poly(spec.field, std::move(coeffs));
}

LfsrSpec lfsr_from_poly(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        fail(ErrorKind::InvalidArgument, "characteristic polynomial must be monic of degree >= 1");
    std::vector<int> taps(f.degree());
    for (int i = 0; i < f.degree(); ++i) taps[i] = f.field().neg(f.coeff(i));
    return LfsrSpec(f.field(), std::move(taps));
}

std::pair<int, LfsrState> lfsr_step(const LfsrSpec& spec, const LfsrState& state) {
    const int n = spec.order();
    if (static_cast<int>(state.registers.size()) != n)
        fail(ErrorKind::LengthMismatch, "state length does not match LFSR order");
    int out = state.registers[0];
    int feedback = 0;
    for (int i = 0; i < n; ++i)
        feedback = spec.field.add(feedback, spec.field.mul(spec.taps[i], state.registers[i]));
    LfsrState next;
    next.registers.assign(state.registers.begin() + 1, state.registers.end());
    next.registers.push_back(feedback);
    return {out, std::move(next)};
}

std::vector<int> impulse_response(const LfsrSpec& spec, int length) {
    if (length < 1) fail(ErrorKind::InvalidArgument, "length must be >= 1");
    LfsrState state;
    state.registers.assign(spec.order(), 0);
    state.registers.back() = 1;
    std::vector<int> out;
    out.reserve(length);
    for (int t = 0; t < length; ++t) {
        auto [o, next] = lfsr_step(spec, state);
        out.push_back(o);
        state = std::move(next);
    }
    return out;
}

long long lfsr_period(const LfsrSpec& spec) {
    if (spec.taps[0] == 0) fail(ErrorKind::DegenerateTaps, "c_0 = 0: state map is not invertible");
    // period of the state orbit from the impulse state; n consecutive outputs
    // determine the state, so this equals the output period
    LfsrState initial;
    initial.registers.assign(spec.order(), 0);
    initial.registers.back() = 1;
    LfsrState state = initial;
    long long cap = ipow(spec.field.size(), spec.order());
    for (long long t = 1; t <= cap; ++t) {
        state = lfsr_step(spec, state).second;
        if (state.registers == initial.registers) return t;
    }
    fail(ErrorKind::InvalidArgument, "period exceeded state-space bound");
}

bool is_m_sequence(const LfsrSpec& spec) {
    if (spec.taps[0] == 0) fail(ErrorKind::DegenerateTaps, "c_0 = 0: state map is not invertible");
    return lfsr_period(spec) == ipow(spec.field.size(), spec.order()) - 1;
}

int sigma_k(const Field& field, std::span<const int> window) {
    if (window.empty()) fail(ErrorKind::InvalidArgument, "window must have length >= 1");
    long long v = 0;
    for (size_t i = window.size(); i-- > 0;) {
        int s = window[i];
        if (s < 0 || s >= field.size()) fail(ErrorKind::ElementOutOfRange, "window entry out of range");
        v = v * field.size() + s;
    }
    return static_cast<int>(v);
}

HopSequence lg_transform(const LfsrSpec& spec, int k) {
    const int n = spec.order();
    if (k < 1 || k > n - 1) fail(ErrorKind::BadK, "window length must satisfy 1 <= k <= n-1");
    if (!is_m_sequence(spec))
        fail(ErrorKind::NotPrimitive, "characteristic polynomial is not primitive");
    const long long period = ipow(spec.field.size(), n) - 1;
    auto s = impulse_response(spec, static_cast<int>(period));
    std::vector<int> u(period);
    std::vector<int> window(k);
    for (long long t = 0; t < period; ++t) {
        for (int i = 0; i < k; ++i) window[i] = s[(t + i) % period];
        u[t] = sigma_k(spec.field, window);
    }
    return HopSequence(static_cast<int>(ipow(spec.field.size(), k)), std::move(u));
}

LgConstruction lg_construct(const Field& field, int n, int k, std::optional<Poly> f) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "order must be >= 2");
    Poly poly = f ? std::move(*f) : [&] {
        auto prims = enumerate_primitive(field, n);
        if (prims.empty()) fail(ErrorKind::NotPrimitive, "no primitive polynomial found");
        return prims.front();
    }();
    if (poly.field() != field || poly.degree() != n)
        fail(ErrorKind::InvalidArgument, "polynomial does not match field and order");
    if (!is_primitive(poly)) fail(ErrorKind::NotPrimitive, "polynomial is not primitive");
    LfsrSpec spec = lfsr_from_poly(poly);
    HopSequence u = lg_transform(spec, k);
    auto corr = fhs_to_ddf(u);
    return LgConstruction{std::move(u), std::move(corr.family), std::move(corr.symbol_map),
                          std::move(poly)};
}

} // namespace ddfkit
