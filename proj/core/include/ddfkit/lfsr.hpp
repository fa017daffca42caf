#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ddfkit/ddf.hpp"
#include "ddfkit/fhs.hpp"
#include "ddfkit/matrix.hpp"
#include "ddfkit/poly.hpp"

namespace ddfkit {

/// n-stage LFSR over GF(q) with feedback s_{t+n} = c_{n-1} s_{t+n-1} + ... + c_0 s_t.
struct LfsrSpec {
    Field field;
    std::vector<int> taps; ///< c_0, ..., c_{n-1}, element indices

    LfsrSpec(Field f, std::vector<int> taps_);
    int order() const { return static_cast<int>(taps.size()); }
};

/// Registers (s_t, ..., s_{t+n-1}).
struct LfsrState {
    std::vector<int> registers;
};

/// Characteristic polynomial x^n - c_{n-1} x^{n-1} - ... - c_0.
Poly characteristic_poly(const LfsrSpec& spec);

/// Taps from a monic characteristic polynomial: c_i = -f_i.
LfsrSpec lfsr_from_poly(const Poly& f);

/// One clock: output s_t, shift, feed back. Also equals state * C for the
/// companion matrix C of the characteristic polynomial.
std::pair<int, LfsrState> lfsr_step(const LfsrSpec& spec, const LfsrState& state);

/// First `length` outputs from the impulse state (0, ..., 0, 1).
std::vector<int> impulse_response(const LfsrSpec& spec, int length);

/// Period of the impulse response. DegenerateTaps when c_0 == 0.
long long lfsr_period(const LfsrSpec& spec);

/// Maximum period q^n - 1, equivalently primitive characteristic polynomial.
bool is_m_sequence(const LfsrSpec& spec);

/// Radix-q combination of a window using canonical element indices:
/// sigma_k(s_t ... s_{t+k-1}) = sum_i idx(s_{t+i}) q^i, in [0, q^k).
int sigma_k(const Field& field, std::span<const int> window);

/// The sigma_k transform of the impulse m-sequence: u_t = sigma_k(s(t, k))
/// for t in [0, q^n - 1), windows wrapping mod the period. Alphabet q^k.
/// NotPrimitive unless the spec generates an m-sequence; BadK unless
/// 1 <= k <= n - 1.
HopSequence lg_transform(const LfsrSpec& spec, int k);

struct LgConstruction {
    HopSequence sequence;
    DifferenceFamily family;     ///< partition type over Z_{q^n-1}
    std::vector<int> symbol_map; ///< class index -> symbol
    Poly poly;                   ///< characteristic polynomial used
};

/// Full m-sequence construction: transform plus its difference family. When f
/// is omitted the first polynomial of enumerate_primitive(field, n) is used.
/// The family satisfies max_d |I(d)| = q^{n-k} - 1 with class sizes
/// {q^{n-k} - 1, q^{n-k}, ..., q^{n-k}}.
LgConstruction lg_construct(const Field& field, int n, int k, std::optional<Poly> f = std::nullopt);

} // namespace ddfkit
