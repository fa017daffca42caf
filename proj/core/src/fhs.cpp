#include "ddfkit/fhs.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ddfkit/numbers.hpp"

namespace ddfkit {

HopSequence::HopSequence(int alphabet, std::vector<int> symbols)
    : q_(alphabet), symbols_(std::move(symbols)) {
    if (q_ < 1) fail(ErrorKind::InvalidArgument, "alphabet size must be >= 1");
    if (symbols_.empty()) fail(ErrorKind::InvalidArgument, "sequence must have length >= 1");
    for (int s : symbols_)
        if (s < 0 || s >= q_)
            fail(ErrorKind::ElementOutOfRange, "symbol " + std::to_string(s) + " outside alphabet");
}

bool HopSequence::operator==(const HopSequence& other) const {
    return q_ == other.q_ && symbols_ == other.symbols_;
}

bool HopSequence::operator<(const HopSequence& other) const {
    return symbols_ < other.symbols_;
}

Fhs::Fhs(int length, int alphabet, std::vector<HopSequence> words)
    : n_(length), q_(alphabet), words_(std::move(words)) {
    if (words_.empty()) fail(ErrorKind::InvalidArgument, "a scheme needs at least one word");
    for (const auto& w : words_) {
        if (w.length() != n_) fail(ErrorKind::LengthMismatch, "scheme words must share one length");
        if (w.alphabet() != q_) fail(ErrorKind::LengthMismatch, "scheme words must share one alphabet");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Fhs Fhs::single(HopSequence word) {
    int n = word.length(), q = word.alphabet();
    return Fhs(n, q, {std::move(word)});
}

bool Fhs::contains(const HopSequence& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool Fhs::operator==(const Fhs& other) const {
    return n_ == other.n_ && q_ == other.q_ && words_ == other.words_;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int n = static_cast<int>(images_.size());
    if (n < 1) fail(ErrorKind::InvalidArgument, "permutation degree must be >= 1");
    std::vector<char> seen(n, 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v]) fail(ErrorKind::InvalidArgument, "images are not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::rotation(int n) { return affine(n, 1, 1); }

Permutation Permutation::affine(int n, int a, int b) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "degree must be >= 1");
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    if (n > 1 && gcd_ll(a, n) != 1) fail(ErrorKind::NotCoprime, "multiplier must be a unit mod n");
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = static_cast<int>((static_cast<long long>(a) * i + b) % n);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::string& text) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<char> moved(n, 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    if (i == text.size()) fail(ErrorKind::ParseError, "empty cycle expression");
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') fail(ErrorKind::ParseError, "expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
            if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail(ErrorKind::ParseError, "expected position in cycle");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > n)
                fail(ErrorKind::ParseError, "position " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (moved[v - 1]) fail(ErrorKind::ParseError, "position " + std::to_string(v) + " repeated");
            moved[v - 1] = 1;
            cycle.push_back(v - 1);
        }
        for (size_t j = 0; j < cycle.size(); ++j)
            im[cycle[j]] = cycle[(j + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& next) const {
    if (size() != next.size()) fail(ErrorKind::LengthMismatch, "composition degree mismatch");
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[i] = next.images_[images_[i]];
    return Permutation(std::move(im));
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<char> done(images_.size(), 0);
    bool any = false;
    for (size_t start = 0; start < images_.size(); ++start) {
        if (done[start] || images_[start] == static_cast<int>(start)) continue;
        out << '(';
        size_t cur = start;
        bool first = true;
        while (!done[cur]) {
            done[cur] = 1;
            if (!first) out << ' ';
            out << (cur + 1);
            first = false;
            cur = images_[cur];
        }
        out << ')';
        any = true;
    }
    if (!any) return "()";
    return out.str();
}

Permutation AffinePerm::to_permutation() const { return Permutation::affine(n, a, b); }

int hamming_correlation(const HopSequence& x, const HopSequence& y, int t) {
    if (x.length() != y.length() || x.alphabet() != y.alphabet())
        fail(ErrorKind::LengthMismatch, "sequences must share length and alphabet");
    int n = x.length();
    if (t < 0 || t >= n) fail(ErrorKind::InvalidArgument, "delay must satisfy 0 <= t < n");
    int h = 0;
    for (int i = 0; i < n; ++i)
        if (x.at(i) == y.at((i + t) % n)) ++h;
    return h;
}

int max_auto(const HopSequence& x) {
    int best = 0;
    for (int t = 1; t < x.length(); ++t) best = std::max(best, hamming_correlation(x, x, t));
    return best;
}

int max_cross(const HopSequence& x, const HopSequence& y) {
    int best = 0;
    for (int t = 0; t < x.length(); ++t) best = std::max(best, hamming_correlation(x, y, t));
    return best;
}

int max_correlation(const Fhs& scheme) {
    int best = 0;
    const auto& ws = scheme.words();
    for (size_t i = 0; i < ws.size(); ++i) {
        best = std::max(best, max_auto(ws[i]));
        for (size_t j = i + 1; j < ws.size(); ++j)
            best = std::max(best, max_cross(ws[i], ws[j]));
    }
    return best;
}

int hamming_distance(const HopSequence& x, const HopSequence& y) {
    if (x.length() != y.length()) fail(ErrorKind::LengthMismatch, "distance needs equal lengths");
    int d = 0;
    for (int i = 0; i < x.length(); ++i)
        if (x.at(i) != y.at(i)) ++d;
    return d;
}

HopSequence rotate(const HopSequence& w, const Permutation& sigma) {
    if (sigma.size() != w.length()) fail(ErrorKind::LengthMismatch, "permutation degree mismatch");
    std::vector<int> out(w.length());
    for (int i = 0; i < w.length(); ++i) out[sigma(i)] = w.at(i);
    return HopSequence(w.alphabet(), std::move(out));
}

Fhs apply_to_scheme(const Fhs& scheme, const Permutation& sigma) {
    std::vector<HopSequence> out;
    out.reserve(scheme.size());
    for (const auto& w : scheme.words()) out.push_back(rotate(w, sigma));
    return Fhs(scheme.length(), scheme.alphabet(), std::move(out));
}

Fhs rotational_closure(const Fhs& scheme) {
    std::vector<HopSequence> out;
    for (const auto& w : scheme.words())
        for (int t = 0; t < scheme.length(); ++t)
            out.push_back(rotate(w, Permutation::affine(scheme.length(), 1, t)));
    return Fhs(scheme.length(), scheme.alphabet(), std::move(out));
}

Fhs rotational_closure(const HopSequence& word) { return rotational_closure(Fhs::single(word)); }

bool is_rotationally_closed(const Fhs& scheme) { return rotational_closure(scheme) == scheme; }

int min_distance(const Fhs& scheme) {
    if (scheme.size() < 2) fail(ErrorKind::TooFewWords, "minimum distance needs at least two words");
    int best = scheme.length() + 1;
    const auto& ws = scheme.words();
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j)
            best = std::min(best, hamming_distance(ws[i], ws[j]));
    return best;
}

std::optional<int> rotation_conjugate_exponent(const Permutation& gamma) {
    int n = gamma.size();
    Permutation rho = Permutation::rotation(n);
    Permutation conj = gamma.then(rho).then(gamma.inverse()); // gamma rho gamma^{-1}
    Permutation acc = Permutation::identity(n);
    for (int e = 0; e < n; ++e) {
        if (acc == conj) return e;
        acc = acc.then(rho);
    }
    return std::nullopt;
}

bool is_in_normalizer(const Permutation& gamma) {
    auto e = rotation_conjugate_exponent(gamma);
    return e.has_value() && (gamma.size() == 1 || gcd_ll(*e, gamma.size()) == 1);
}

std::vector<Permutation> normalizer_elements(int n) {
    std::vector<Permutation> out;
    for (int a : units_mod(n)) {
        if (n == 1) a = 1;
        for (int b = 0; b < n; ++b) out.push_back(Permutation::affine(n, a, b));
    }
    return out;
}

AffinePerm phi_gamma(const Permutation& gamma) {
    int n = gamma.size();
    if (!is_in_normalizer(gamma))
        fail(ErrorKind::NotInNormalizer, "permutation does not normalize the rotation subgroup");
    Permutation rho = Permutation::rotation(n);
    Permutation conj = gamma.inverse().then(rho).then(gamma); // gamma^{-1} rho gamma
    Permutation acc = Permutation::identity(n);
    int a = 0;
    for (int e = 0; e < n; ++e) {
        if (acc == conj) { a = e; break; }
        acc = acc.then(rho);
    }
    return AffinePerm{n, n == 1 ? 1 : a, gamma(0)}; // b = 1^gamma - 1
}

FhsDdfCorrespondence fhs_to_ddf(const HopSequence& word) {
    int n = word.length();
    std::vector<int> symbols;
    for (int s = 0; s < word.alphabet(); ++s)
        if (std::find(word.symbols().begin(), word.symbols().end(), s) != word.symbols().end())
            symbols.push_back(s);
    std::vector<std::vector<int>> classes(symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i)
        for (int j = 0; j < n; ++j)
            if (word.at(j) == symbols[i]) classes[i].push_back(j);
    return FhsDdfCorrespondence{DifferenceFamily(n, std::move(classes)), std::move(symbols)};
}

HopSequence ddf_to_fhs(const DifferenceFamily& family) {
    if (!family.is_partition())
        fail(ErrorKind::NotPartitionType, "classes do not partition Z_v");
    std::vector<int> word(family.modulus(), 0);
    for (int i = 0; i < family.class_count(); ++i)
        for (int j : family.classes()[i]) word[j] = i;
    return HopSequence(family.class_count(), std::move(word));
}

namespace {

// Backtracking search for a symbol bijection carrying `from` onto `to` as
// word sets. Words are matched pairwise; partial maps must stay injective.
bool match_symbols(const std::vector<HopSequence>& from, const std::vector<HopSequence>& to,
                   size_t next, std::vector<char>& used, std::vector<int>& map,
                   std::vector<int>& rmap) {
    if (next == from.size()) return true;
    for (size_t cand = 0; cand < to.size(); ++cand) {
        if (used[cand]) continue;
        std::vector<std::pair<int, int>> added;
        bool ok = true;
        for (int i = 0; i < from[next].length() && ok; ++i) {
            int s = from[next].at(i), t = to[cand].at(i);
            if (map[s] == -1 && rmap[t] == -1) {
                map[s] = t;
                rmap[t] = s;
                added.emplace_back(s, t);
            } else if (map[s] != t) {
                ok = false;
            }
        }
        if (ok) {
            used[cand] = 1;
            if (match_symbols(from, to, next + 1, used, map, rmap)) return true;
            used[cand] = 0;
        }
        for (auto [s, t] : added) {
            map[s] = -1;
            rmap[t] = -1;
        }
    }
    return false;
}

} // namespace

std::optional<FhsEquivalence> fhs_equivalent(const Fhs& f1, const Fhs& f2) {
    if (f1.length() != f2.length() || f1.alphabet() != f2.alphabet() || f1.size() != f2.size())
        return std::nullopt;
    int n = f1.length(), q = f1.alphabet();
    for (int a : units_mod(n)) {
        if (n == 1) a = 1;
        for (int b = 0; b < n; ++b) {
            Fhs moved = apply_to_scheme(f1, Permutation::affine(n, a, b));
            std::vector<int> map(q, -1), rmap(q, -1);
            std::vector<char> used(f2.size(), 0);
            if (match_symbols(moved.words(), f2.words(), 0, used, map, rmap)) {
                // complete the partial map to a bijection of the alphabet
                for (int s = 0; s < q; ++s) {
                    if (map[s] != -1) continue;
                    for (int t = 0; t < q; ++t)
                        if (rmap[t] == -1) {
                            map[s] = t;
                            rmap[t] = s;
                            break;
                        }
                }
                return FhsEquivalence{std::move(map), AffinePerm{n, a, b}};
            }
        }
    }
    return std::nullopt;
}

} // namespace ddfkit
