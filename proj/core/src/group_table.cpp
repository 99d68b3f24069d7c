#include "smashquot/group_table.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace smashquot {

FiniteGroupTable::FiniteGroupTable(std::size_t order, std::vector<std::uint32_t> mult,
                                   std::size_t identity)
    : order_(order), mult_(std::move(mult)), identity_(identity) {
    if (mult_.size() != order_ * order_)
        throw std::invalid_argument("group table: wrong multiplication table size");
    for (auto v : mult_)
        if (v >= order_) throw std::invalid_argument("group table: entry out of range");
    inv_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < order_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inv_[a] = static_cast<std::uint32_t>(b);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("group table: element without inverse");
    }
}

FiniteGroupTable FiniteGroupTable::trivial() { return cyclic(1); }

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic: order must be >= 1");
    std::vector<std::uint32_t> m(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    return FiniteGroupTable(n, std::move(m), 0);
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
    std::size_t n = a.order() * b.order();
    std::vector<std::uint32_t> m(n * n);
    auto idx = [&](std::size_t x, std::size_t y) { return x * b.order() + y; };
    for (std::size_t x1 = 0; x1 < a.order(); ++x1)
        for (std::size_t y1 = 0; y1 < b.order(); ++y1)
            for (std::size_t x2 = 0; x2 < a.order(); ++x2)
                for (std::size_t y2 = 0; y2 < b.order(); ++y2)
                    m[idx(x1, y1) * n + idx(x2, y2)] =
                        static_cast<std::uint32_t>(idx(a.mul(x1, x2), b.mul(y1, y2)));
    return FiniteGroupTable(n, std::move(m), idx(a.identity(), b.identity()));
}

std::size_t FiniteGroupTable::power(std::size_t a, const Int& e) const {
    Int k = mod_floor(e, element_order(a));
    std::size_t r = identity_;
    for (Int i(0); i < k; ++i) r = mul(r, a);
    return r;
}

FiniteGroupTable::ValidationReport FiniteGroupTable::validate() const {
    ValidationReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 8) rep.failures.push_back(s);
    };
    for (std::size_t a = 0; a < order_; ++a) {
        if (mul(identity_, a) != a || mul(a, identity_) != a) fail("identity axiom fails");
        if (mul(a, inv(a)) != identity_) fail("inverse axiom fails");
    }
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            for (std::size_t c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    std::ostringstream os;
                    os << "associativity fails at (" << a << "," << b << "," << c << ")";
                    fail(os.str());
                    return rep;
                }
    return rep;
}

bool FiniteGroupTable::is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

Int FiniteGroupTable::element_order(std::size_t a) const {
    std::size_t x = a;
    Int n(1);
    while (x != identity_) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

Int FiniteGroupTable::exponent() const {
    Int e(1);
    for (std::size_t a = 0; a < order_; ++a) e = lcm(e, element_order(a));
    return e;
}

std::vector<Int> FiniteGroupTable::order_profile() const {
    std::vector<Int> p;
    for (std::size_t a = 0; a < order_; ++a) p.push_back(element_order(a));
    std::sort(p.begin(), p.end());
    return p;
}

namespace {

// extend a partial map on generators to the whole group, false on conflict
bool extends_to_isomorphism(const FiniteGroupTable& g, const FiniteGroupTable& h,
                            const std::vector<std::size_t>& gens,
                            const std::vector<std::size_t>& images) {
    std::vector<std::size_t> map(g.order(), g.order());
    map[g.identity()] = h.identity();
    std::vector<std::size_t> frontier{g.identity()};
    std::vector<std::size_t> known{g.identity()};
    // close under right multiplication by generators
    for (std::size_t head = 0; head < known.size(); ++head) {
        std::size_t x = known[head];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::size_t y = g.mul(x, gens[i]);
            std::size_t fy = h.mul(map[x], images[i]);
            if (map[y] == g.order()) {
                map[y] = fy;
                known.push_back(y);
            } else if (map[y] != fy) {
                return false;
            }
        }
    }
    if (known.size() != g.order()) return false;  // gens do not generate
    std::vector<bool> hit(h.order(), false);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (hit[map[x]]) return false;
        hit[map[x]] = true;
    }
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
    return true;
}

std::vector<std::size_t> small_generating_set(const FiniteGroupTable& g) {
    std::vector<std::size_t> gens;
    std::vector<bool> in(g.order(), false);
    in[g.identity()] = true;
    std::size_t covered = 1;
    while (covered < g.order()) {
        std::size_t pick = 0;
        while (in[pick]) ++pick;
        gens.push_back(pick);
        // close
        std::vector<std::size_t> frontier{g.identity()};
        std::fill(in.begin(), in.end(), false);
        in[g.identity()] = true;
        covered = 1;
        for (std::size_t head = 0; head < frontier.size(); ++head)
            for (std::size_t x : gens) {
                std::size_t y = g.mul(frontier[head], x);
                if (!in[y]) {
                    in[y] = true;
                    ++covered;
                    frontier.push_back(y);
                }
            }
    }
    return gens;
}

}  // namespace

bool FiniteGroupTable::isomorphic_to(const FiniteGroupTable& o) const {
    if (order_ != o.order_) return false;
    if (order_profile() != o.order_profile()) return false;
    auto gens = small_generating_set(*this);
    // candidate images restricted to matching element orders
    std::vector<std::vector<std::size_t>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Int ord = element_order(gens[i]);
        for (std::size_t y = 0; y < o.order(); ++y)
            if (o.element_order(y) == ord) candidates[i].push_back(y);
    }
    std::vector<std::size_t> images(gens.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == gens.size()) return extends_to_isomorphism(*this, o, gens, images);
        for (std::size_t y : candidates[i]) {
            images[i] = y;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

GroupActionTable::Report GroupActionTable::verify(const FiniteGroupTable& target) const {
    Report rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 8) rep.failures.push_back(s);
    };
    if (perm.size() != acting.order()) {
        fail("action table: one permutation per acting element required");
        return rep;
    }
    for (std::size_t a = 0; a < acting.order(); ++a) {
        if (perm[a].size() != target.order()) {
            fail("action table: permutation size mismatch");
            return rep;
        }
        std::vector<bool> hit(target.order(), false);
        for (auto y : perm[a]) {
            if (y >= target.order() || hit[y]) fail("action entry is not a permutation");
            else hit[y] = true;
        }
        for (std::size_t x = 0; x < target.order(); ++x)
            for (std::size_t y = 0; y < target.order(); ++y)
                if (perm[a][target.mul(x, y)] != target.mul(perm[a][x], perm[a][y])) {
                    std::ostringstream os;
                    os << "element " << a << " does not act as automorphism, witness (" << x << ","
                       << y << ")";
                    fail(os.str());
                    return rep;
                }
    }
    for (std::size_t x = 0; x < target.order(); ++x)
        if (perm[acting.identity()][x] != x) fail("identity does not act trivially");
    for (std::size_t a = 0; a < acting.order(); ++a)
        for (std::size_t b = 0; b < acting.order(); ++b)
            for (std::size_t x = 0; x < target.order(); ++x)
                if (perm[acting.mul(a, b)][x] != perm[a][perm[b][x]]) {
                    std::ostringstream os;
                    os << "action incompatible with group law at (" << a << "," << b << ")";
                    fail(os.str());
                    return rep;
                }
    return rep;
}

GroupActionTable GroupActionTable::trivial(const FiniteGroupTable& acting,
                                           const FiniteGroupTable& target) {
    GroupActionTable t;
    t.acting = acting;
    t.perm.assign(acting.order(), {});
    for (auto& p : t.perm) {
        p.resize(target.order());
        for (std::size_t x = 0; x < target.order(); ++x) p[x] = static_cast<std::uint32_t>(x);
    }
    return t;
}

}  // namespace smashquot
