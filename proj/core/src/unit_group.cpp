#include "smashquot/unit_group.hpp"

#include <set>
#include <sstream>

namespace smashquot {

UnitGroupSpec::UnitGroupSpec(std::vector<UnitGenerator> generators) : gens_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate unit generator name: " + g.name);
        if (g.order && *g.order < 1)
            throw std::invalid_argument("unit generator order must be >= 1: " + g.name);
    }
}

std::optional<std::size_t> UnitGroupSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

Int UnitGroupSpec::torsion_lcm() const {
    Int l(1);
    for (const auto& g : gens_)
        if (g.order) l = lcm(l, *g.order);
    return l;
}

std::vector<std::size_t> UnitGroupSpec::infinite_indices() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!gens_[i].order) r.push_back(i);
    return r;
}

bool UnitGroupSpec::operator==(const UnitGroupSpec& o) const {
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].order != o.gens_[i].order) return false;
    return true;
}

UnitGroupRef make_unit_group(std::vector<UnitGenerator> generators) {
    return std::make_shared<const UnitGroupSpec>(std::move(generators));
}

UnitValue::UnitValue(UnitGroupRef spec, std::vector<Int> exponents)
    : spec_(std::move(spec)), exps_(std::move(exponents)) {
    if (!spec_) throw std::invalid_argument("UnitValue: null group spec");
    if (exps_.size() != spec_->size())
        throw std::invalid_argument("UnitValue: exponent count does not match generator count");
    canonicalize();
}

void UnitValue::canonicalize() {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (const auto& m = spec_->gen(i).order) exps_[i] = mod_floor(exps_[i], *m);
}

UnitValue UnitValue::one(UnitGroupRef spec) {
    std::vector<Int> z(spec->size(), Int(0));
    return UnitValue(std::move(spec), std::move(z));
}

UnitValue UnitValue::generator(UnitGroupRef spec, std::size_t index, const Int& e) {
    std::vector<Int> z(spec->size(), Int(0));
    z.at(index) = e;
    return UnitValue(std::move(spec), std::move(z));
}

void UnitValue::check_compatible(const UnitValue& o) const {
    if (!spec_ || !o.spec_) throw std::invalid_argument("UnitValue: uninitialized operand");
    if (spec_ != o.spec_ && !(*spec_ == *o.spec_))
        throw std::invalid_argument("UnitValue: operands from different unit groups");
}

UnitValue UnitValue::operator*(const UnitValue& o) const {
    check_compatible(o);
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
    return UnitValue(spec_, std::move(e));
}

UnitValue UnitValue::inverse() const {
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
    return UnitValue(spec_, std::move(e));
}

UnitValue UnitValue::pow(const Int& p) const {
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] * p;
    return UnitValue(spec_, std::move(e));
}

bool UnitValue::is_one() const {
    for (const Int& e : exps_)
        if (e != 0) return false;
    return true;
}

std::optional<Int> UnitValue::order() const {
    Int n(1);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        const auto& m = spec_->gen(i).order;
        if (!m) return std::nullopt;
        n = lcm(n, *m / gcd(*m, exps_[i]));
    }
    return n;
}

bool UnitValue::operator==(const UnitValue& o) const {
    check_compatible(o);
    return exps_ == o.exps_;
}

bool UnitValue::operator<(const UnitValue& o) const {
    check_compatible(o);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        int c = cmp(exps_[i], o.exps_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string UnitValue::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << spec_->gen(i).name;
        if (exps_[i] != 1) os << "^" << exps_[i].get_str();
    }
    return os.str();
}

}  // namespace smashquot
