#include "dp1/pin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dp1/errors.hpp"
#include "dp1/root_system.hpp"

namespace dp1 {

namespace {

// q(n b) = n q(b) + (n^2 - n)(b.b), from q(u+v) = q(u) + q(v) + 2 u.v.
Int scaled(Int n, Int qb, Int bb) { return n * qb + (n * n - n) * bb; }

std::optional<std::vector<CremonaMove>> bfs(const Code& from, const Code* target, Code* best) {
    std::map<Code, std::pair<Code, CremonaMove>> parent;
    std::deque<Code> queue{from};
    std::map<Code, bool> seen{{from, true}};
    const auto moves = cremona_moves(from.pairs());
    auto path_to = [&](Code c) {
        std::vector<CremonaMove> path;
        while (c != from) {
            const auto& [prev, mv] = parent.at(c);
            path.push_back(mv);
            c = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    Code lex_min = from;
    while (!queue.empty()) {
        Code cur = queue.front();
        queue.pop_front();
        if (target && cur == *target) return path_to(cur);
        if (cur < lex_min) lex_min = cur;
        for (const auto& mv : moves) {
            Code next = apply(cur, mv);
            if (seen.emplace(next, true).second) {
                parent.emplace(next, std::make_pair(cur, mv));
                queue.push_back(next);
            }
        }
    }
    if (target) return std::nullopt;
    *best = lex_min;
    return path_to(lex_min);
}

void check_real_index(const Code& code, int i) {
    if (i < 1 || i > code.real_count())
        throw std::invalid_argument("Cremona index " + std::to_string(i) + " is not a real exceptional index");
}

}  // namespace

Int i_power(QhatValue q) {
    if (!q.is_even()) throw InvariantViolation("odd q-hat value " + std::to_string(q.value()) + " on a B-class");
    return q.value() == 0 ? 1 : -1;
}

Code::Code(int pairs, const std::vector<Int>& residues) : pairs_(pairs) {
    if (pairs < 0 || pairs > 4) throw std::invalid_argument("number of imaginary pairs must be in 0..4");
    if (static_cast<int>(residues.size()) != 9 - 2 * pairs)
        throw std::invalid_argument("code length must be " + std::to_string(9 - 2 * pairs));
    Int sum = 0;
    for (Int r : residues) {
        const int v = QhatValue(r).value();
        if (v % 2 == 0) throw std::invalid_argument("code residues must be odd");
        residues_.push_back(v);
        sum += v;
    }
    if (QhatValue(sum).value() != 1) throw std::invalid_argument("code residues must sum to 1 mod 4");
}

Code Code::from_signs(int pairs, const std::vector<int>& signs) {
    std::vector<Int> r;
    for (int s : signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("code signs must be +1 or -1");
        r.push_back(s);
    }
    return Code(pairs, r);
}

Code Code::all_plus(int pairs) { return Code(pairs, std::vector<Int>(static_cast<std::size_t>(9 - 2 * pairs), 1)); }

Code Code::all_minus(int pairs) { return Code(pairs, std::vector<Int>(static_cast<std::size_t>(9 - 2 * pairs), -1)); }

std::string Code::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << (residues_[i] == 1 ? "1" : "-1");
    os << ')';
    return os.str();
}

bool is_real_class(int pairs, const PicClass& x) {
    for (int k = 0; k < pairs; ++k) {
        const auto hi = static_cast<std::size_t>(8 - 2 * k);
        if (x[hi] != x[hi - 1]) return false;
    }
    return true;
}

QhatValue qhat_code(const Code& code, const PicClass& x) {
    if (!is_real_class(code.pairs(), x)) throw std::invalid_argument("class is not real in this model: " + x.to_string());
    Int q = scaled(x[0], code.residue(0), 1);
    for (int i = 1; i <= code.real_count(); ++i) q += scaled(x[static_cast<std::size_t>(i)], code.residue(i), -1);
    // each imaginary pair sum has square -2 and q = 0
    for (int k = 0; k < code.pairs(); ++k) q += scaled(x[static_cast<std::size_t>(8 - 2 * k)], 0, -2);
    return QhatValue(q);
}

QhatValue qhat_vanishing_basis(const Sublattice& basis, const PicClass& x) {
    const auto n = basis.coordinates_of(x);
    if (!n) throw std::invalid_argument("class is not in the span of the vanishing basis: " + x.to_string());
    Int s = square(x);
    for (Int c : *n) s += 2 * c;
    return QhatValue(s);
}

std::string CremonaMove::to_string() const {
    if (kind == Kind::Imaginary) return "imaginary(" + std::to_string(i) + ")";
    return "real(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Code cremona_code(const Code& code, int i, int j, int k) {
    check_real_index(code, i);
    check_real_index(code, j);
    check_real_index(code, k);
    if (i == j || j == k || i == k) throw std::invalid_argument("Cremona indices must be distinct");
    std::vector<Int> r(code.residues().begin(), code.residues().end());
    const Int a0 = r[0], ai = r[static_cast<std::size_t>(i)], aj = r[static_cast<std::size_t>(j)],
              ak = r[static_cast<std::size_t>(k)];
    r[0] = ai + aj + ak;
    r[static_cast<std::size_t>(i)] = a0 + aj + ak;
    r[static_cast<std::size_t>(j)] = a0 + ai + ak;
    r[static_cast<std::size_t>(k)] = a0 + ai + aj;
    return Code(code.pairs(), r);
}

Code cremona_imaginary(const Code& code, int i) {
    if (code.pairs() == 0) throw std::invalid_argument("imaginary Cremona move needs an imaginary pair");
    check_real_index(code, i);
    std::vector<Int> r(code.residues().begin(), code.residues().end());
    std::swap(r[0], r[static_cast<std::size_t>(i)]);
    return Code(code.pairs(), r);
}

Code apply(const Code& code, const CremonaMove& move) {
    if (move.kind == CremonaMove::Kind::Imaginary) return cremona_imaginary(code, move.i);
    return cremona_code(code, move.i, move.j, move.k);
}

PicClass cremona_coordinates(const CremonaMove& move, const PicClass& x) {
    int i = move.i, j = move.j, k = move.k;
    if (move.kind == CremonaMove::Kind::Imaginary) {
        j = 7;
        k = 8;
    }
    for (int t : {i, j, k})
        if (t < 1 || t > 8) throw std::invalid_argument("Cremona index out of range");
    if (i == j || j == k || i == k) throw std::invalid_argument("Cremona indices must be distinct");
    const PicClass h = PicClass::hyperplane();
    auto l = [](int t) { return PicClass::exceptional(t); };
    std::array<PicClass, PicClass::kSize> nb;
    nb[0] = 2 * h - l(i) - l(j) - l(k);
    for (int t = 1; t <= 8; ++t) nb[static_cast<std::size_t>(t)] = l(t);
    nb[static_cast<std::size_t>(i)] = h - l(j) - l(k);
    nb[static_cast<std::size_t>(j)] = h - l(i) - l(k);
    nb[static_cast<std::size_t>(k)] = h - l(i) - l(j);
    PicClass out;
    out[0] = intersect(x, nb[0]);
    for (std::size_t t = 1; t < PicClass::kSize; ++t) out[t] = -intersect(x, nb[t]);
    return out;
}

std::vector<CremonaMove> cremona_moves(int pairs) {
    const int n = 8 - 2 * pairs;
    std::vector<CremonaMove> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.push_back({CremonaMove::Kind::Real, i, j, k});
    if (pairs > 0)
        for (int i = 1; i <= n; ++i) out.push_back({CremonaMove::Kind::Imaginary, i, 0, 0});
    return out;
}

NormalizedCode normalize_code(const Code& code) {
    Code best = code;
    auto path = bfs(code, nullptr, &best);
    return {best, std::move(*path)};
}

std::optional<std::vector<CremonaMove>> cremona_path(const Code& from, const Code& to) {
    if (from.pairs() != to.pairs()) return std::nullopt;
    return bfs(from, &to, nullptr);
}

QhatValue qhat(const PinModel& model, const PicClass& x) {
    if (const auto* c = std::get_if<Code>(&model)) return qhat_code(*c, x);
    return qhat_vanishing_basis(std::get<VanishingBasis>(model).basis, x);
}

std::optional<std::vector<PicClass>> find_vanishing_simple_system(const std::vector<PicClass>& roots,
                                                                  const PinModel& model, std::uint64_t seed,
                                                                  int attempts) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> dist(-1000000, 1000000);
    for (int a = 0; a < attempts; ++a) {
        std::array<Int, PicClass::kSize> f;
        for (auto& v : f) v = dist(rng);
        const auto simple = simple_roots(roots, f);
        if (simple.empty()) continue;
        if (std::all_of(simple.begin(), simple.end(), [&](const PicClass& s) { return qhat(model, s).value() == 0; }))
            return simple;
    }
    return std::nullopt;
}

}  // namespace dp1
