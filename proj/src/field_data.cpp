#include "wsteen/field_data.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace wsteen {

uint8_t WittRing::neg(uint8_t a) const {
    for (int b = 0; b < order; ++b)
        if (add(a, static_cast<uint8_t>(b)) == 0) return static_cast<uint8_t>(b);
    throw PresetError("witt table has no additive inverse");
}

int WittRing::element_order(uint8_t a) const {
    int n = 1;
    uint8_t acc = a;
    while (acc != 0) {
        acc = add(acc, a);
        n++;
        if (n > order) throw PresetError("witt table is not a group");
    }
    return a == 0 ? 1 : n;
}

bool WittRing::in_ideal_pow(uint8_t a, int n) const {
    if (n <= 0) return true;
    if (n >= static_cast<int>(ideal_pow.size())) return a == 0;
    const auto& g = ideal_pow[n];
    return std::find(g.begin(), g.end(), a) != g.end();
}

std::size_t WittRing::encode_width() const { return order == 4 && element_order(1) == 4 ? 1 : (order == 4 ? 2 : 1); }

std::vector<uint8_t> WittRing::encode_z4(uint8_t a) const {
    // Z/4 embeds as itself; elementary groups embed coordinatewise as {0,2}.
    if (order == 4 && element_order(1) == 4) return {a};
    if (order == 4) return {static_cast<uint8_t>((a & 1) * 2), static_cast<uint8_t>(((a >> 1) & 1) * 2)};
    return {static_cast<uint8_t>((a & 1) * 2)};
}

bool WittRing::is_associative_commutative_unital() const {
    for (int a = 0; a < order; ++a) {
        if (mul(static_cast<uint8_t>(a), static_cast<uint8_t>(one)) != a) return false;
        for (int b = 0; b < order; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
            for (int c = 0; c < order; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) return false;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
            }
        }
    }
    return true;
}

namespace {

std::shared_ptr<const WittRing> make_witt_z2() {
    auto w = std::make_shared<WittRing>();
    w->order = 2;
    w->one = 1;
    w->add_table = {0, 1, 1, 0};
    w->mul_table = {0, 0, 0, 1};
    w->unit_classes = {1};
    w->ideal_pow = {{0, 1}, {0}};
    w->names = {"0", "<1>"};
    return w;
}

std::shared_ptr<const WittRing> make_witt_z4() {
    auto w = std::make_shared<WittRing>();
    w->order = 4;
    w->one = 1;
    w->add_table.resize(16);
    w->mul_table.resize(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            w->add_table[a * 4 + b] = static_cast<uint8_t>((a + b) & 3);
            w->mul_table[a * 4 + b] = static_cast<uint8_t>((a * b) & 3);
        }
    w->unit_classes = {1, 3};  // <1>, <-1>
    w->ideal_pow = {{0, 1, 2, 3}, {0, 2}, {0}};
    w->names = {"0", "<1>", "2<1>", "3<1>"};
    return w;
}

std::shared_ptr<const WittRing> make_witt_klein() {
    // (Z/2)^2 on bits (<1>, <u>), <u>^2 = <1>.
    auto w = std::make_shared<WittRing>();
    w->order = 4;
    w->one = 1;
    w->add_table.resize(16);
    w->mul_table.resize(16);
    auto mulbits = [](int a, int b) {
        int r = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (((a >> i) & 1) && ((b >> j) & 1)) r ^= ((i + j) % 2 == 0) ? 1 : 2;  // <u><u>=<1>
        return r;
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            w->add_table[a * 4 + b] = static_cast<uint8_t>(a ^ b);
            w->mul_table[a * 4 + b] = static_cast<uint8_t>(mulbits(a, b));
        }
    w->unit_classes = {1, 2};  // <1>, <u>
    w->ideal_pow = {{0, 1, 2, 3}, {0, 3}, {0}};
    w->names = {"0", "<1>", "<u>", "<1>+<u>"};
    return w;
}

}  // namespace

const WittRing& FieldPreset::witt() const {
    if (!witt_) throw PresetError("preset '" + name_ + "' carries no Witt model");
    return *witt_;
}

bool FieldPreset::km2_vanishes() const { return km_dim(2) == 0; }

std::optional<KM2Mono> FieldPreset::normalize_mono(const std::vector<int>& raw) const {
    assert(raw.size() == class_names_.size());
    if (raw[0] >= rho_nilpotence_) return std::nullopt;
    for (const auto& v : vanishing_) {
        bool divides = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (raw[i] < v[i]) { divides = false; break; }
        if (divides) return std::nullopt;
    }
    KM2Mono m;
    m.e.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0 || raw[i] > 255) throw PresetError("k^M exponent out of range");
        m.e[i] = static_cast<uint8_t>(raw[i]);
    }
    return m;
}

std::optional<KM2Mono> FieldPreset::mono_mul(const KM2Mono& a, const KM2Mono& b) const {
    std::vector<int> raw(class_names_.size(), 0);
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = a.e[i] + b.e[i];
    return normalize_mono(raw);
}

std::optional<KM2Mono> FieldPreset::mono_by_name(const std::string& cls) const {
    for (std::size_t i = 0; i < class_names_.size(); ++i)
        if (class_names_[i] == cls) {
            std::vector<int> raw(class_names_.size(), 0);
            raw[i] = 1;
            return normalize_mono(raw);
        }
    return std::nullopt;
}

KM2Element FieldPreset::km_zero() const { return KM2Element{shared_from_this(), {}}; }

KM2Element FieldPreset::km_from_mono(const std::optional<KM2Mono>& m) const {
    KM2Element e{shared_from_this(), {}};
    if (m) e.terms.push_back(*m);
    return e;
}

std::vector<KM2Mono> FieldPreset::km_basis(int degree) const {
    std::vector<KM2Mono> out;
    std::vector<int> raw(class_names_.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == raw.size()) {
            raw[idx] = remaining;
            if (auto m = normalize_mono(raw)) out.push_back(*m);
            raw[idx] = 0;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            raw[idx] = k;
            self(self, idx + 1, remaining - k);
        }
        raw[idx] = 0;
    };
    if (degree < 0) return out;
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldPreset::mono_str(const KM2Mono& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += class_names_[i];
        if (m.e[i] > 1) s += "^" + std::to_string(static_cast<int>(m.e[i]));
    }
    return s.empty() ? "1" : s;
}

std::vector<KWElement> FieldPreset::kw_group(int n) const {
    const WittRing& w = witt();
    int k = std::max(n, 0);
    std::vector<KWElement> out;
    if (k >= static_cast<int>(w.ideal_pow.size())) {
        out.push_back({n, 0});
        return out;
    }
    for (uint8_t v : w.ideal_pow[k]) out.push_back({n, v});
    return out;
}

int FieldPreset::kw_log2_order(int n) const {
    std::size_t sz = kw_group(n).size();
    int lg = 0;
    while ((std::size_t(1) << lg) < sz) ++lg;
    return lg;
}

KWElement FieldPreset::kw_rho() const {
    const WittRing& w = witt();
    uint8_t v = w.add(static_cast<uint8_t>(w.one), static_cast<uint8_t>(w.one));
    if (!w.in_ideal_pow(v, 1)) throw PresetError("<1,1> not in the fundamental ideal");
    return {1, v};
}

KWElement FieldPreset::kw_add(const KWElement& a, const KWElement& b) const {
    if (a.deg != b.deg) throw PresetError("K^W addition across degrees");
    return {a.deg, witt().add(a.val, b.val)};
}

KWElement FieldPreset::kw_mul(const KWElement& a, const KWElement& b) const {
    KWElement r{a.deg + b.deg, witt().mul(a.val, b.val)};
    if (!witt().in_ideal_pow(r.val, r.deg))
        throw PresetError("K^W product left its ideal power");
    return r;
}

KWElement FieldPreset::kw_eta(const KWElement& x) const {
    // inclusion I^{max(n,0)} ⊆ I^{max(n-1,0)}
    return {x.deg - 1, x.val};
}

KM2Element FieldPreset::kw_residue(const KWElement& x) const {
    if (x.deg < 0) return km_zero();
    if (x.deg >= static_cast<int>(residue_class_.size())) return km_zero();
    uint8_t idx = residue_class_[x.deg][x.val];
    if (idx == 0) return km_zero();
    auto basis = km_basis(x.deg);
    KM2Element e{shared_from_this(), {basis[idx - 1]}};
    return e;
}

int FieldPreset::kw_eta_coker_dim(int n) const {
    if (n < 0) return 0;
    return kw_log2_order(n) - kw_log2_order(n + 1);
}

KWElement FieldPreset::kw_lift_class(int class_idx) const {
    if (class_idx == 0) return kw_rho();
    std::vector<int> raw(class_names_.size(), 0);
    raw[class_idx] = 1;
    KM2Element target = km_from_mono(normalize_mono(raw));
    if (target.is_zero()) return kw_zero(1);
    for (const KWElement& x : kw_group(1))
        if (x.val != 0 && kw_residue(x) == target) return x;
    throw PresetError("no Witt lift for class '" + class_names_[class_idx] + "'");
}

KWElement FieldPreset::kw_lift_mono(const KM2Mono& c) const {
    KWElement acc = kw_one();
    for (std::size_t i = 0; i < c.e.size(); ++i)
        for (int k = 0; k < c.e[i]; ++k) acc = kw_mul(acc, kw_lift_class(static_cast<int>(i)));
    return acc;
}

std::vector<KWElement> FieldPreset::kw_group_generators(int n) const {
    std::vector<KWElement> gens;
    std::vector<uint8_t> span = {0};
    for (const KWElement& x : kw_group(n)) {
        if (x.val == 0) continue;
        if (std::find(span.begin(), span.end(), x.val) != span.end()) continue;
        gens.push_back(x);
        std::vector<uint8_t> grown = span;
        for (uint8_t s : span) {
            uint8_t acc = s;
            for (int k = 0; k < witt().order; ++k) {
                acc = witt().add(acc, x.val);
                if (std::find(grown.begin(), grown.end(), acc) == grown.end()) grown.push_back(acc);
            }
        }
        span = std::move(grown);
    }
    return gens;
}

namespace {

/* residue tables: residue_class_[n][val] = (index into km_basis(n)) + 1 */
std::vector<std::vector<uint8_t>> residues_for(const WittRing& w, int km1_dim) {
    std::vector<std::vector<uint8_t>> res;
    // n = 0: rank mod 2.  An element is even-rank iff it lies in I.
    std::vector<uint8_t> r0(w.order, 0);
    for (int v = 0; v < w.order; ++v)
        r0[v] = w.in_ideal_pow(static_cast<uint8_t>(v), 1) ? 0 : 1;
    res.push_back(std::move(r0));
    // n = 1: I/I^2 ≅ k^M_1 (zero or one nontrivial class for these presets)
    std::vector<uint8_t> r1(w.order, 0);
    if (km1_dim > 0 && w.ideal_pow.size() > 1)
        for (uint8_t v : w.ideal_pow[1])
            if (!w.in_ideal_pow(v, 2)) r1[v] = 1;
    res.push_back(std::move(r1));
    return res;
}

}  // namespace

PresetPtr FieldPreset::qcl() {
    auto p = std::shared_ptr<FieldPreset>(new FieldPreset());
    p->kind_ = PresetKind::QuadraticallyClosed;
    p->name_ = "qcl";
    p->rho_nilpotence_ = 1;
    p->class_names_ = {"rho"};
    p->witt_ = make_witt_z2();
    p->residue_class_ = residues_for(*p->witt_, 0);
    return p;
}

PresetPtr FieldPreset::fq1() {
    auto p = std::shared_ptr<FieldPreset>(new FieldPreset());
    p->kind_ = PresetKind::FiniteFieldQ1;
    p->name_ = "fq1";
    p->rho_nilpotence_ = 1;
    p->class_names_ = {"rho", "u"};
    p->vanishing_ = {{0, 2}};  // u^2 = 0 (k^M_2 = 0)
    p->witt_ = make_witt_klein();
    p->residue_class_ = residues_for(*p->witt_, 1);
    return p;
}

PresetPtr FieldPreset::fq3() {
    auto p = std::shared_ptr<FieldPreset>(new FieldPreset());
    p->kind_ = PresetKind::FiniteFieldQ3;
    p->name_ = "fq3";
    p->rho_nilpotence_ = 2;
    p->class_names_ = {"rho"};
    p->witt_ = make_witt_z4();
    p->residue_class_ = residues_for(*p->witt_, 1);
    return p;
}

PresetPtr FieldPreset::custom(int rho_nilpotence, std::vector<std::string> extra,
                              std::vector<std::vector<uint8_t>> vanishing, std::string name) {
    if (rho_nilpotence < 1) throw PresetError("rho_nilpotence must be positive");
    auto p = std::shared_ptr<FieldPreset>(new FieldPreset());
    p->kind_ = PresetKind::CustomNilpotent;
    p->name_ = std::move(name);
    p->rho_nilpotence_ = rho_nilpotence;
    p->class_names_ = {"rho"};
    for (auto& c : extra) {
        if (c == "rho") throw PresetError("duplicate class 'rho'");
        p->class_names_.push_back(std::move(c));
    }
    for (auto& v : vanishing) {
        if (v.size() != p->class_names_.size())
            throw PresetError("vanishing product has wrong arity");
        p->vanishing_.push_back(std::move(v));
    }
    return p;
}

PresetPtr FieldPreset::custom_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PresetError("cannot open preset file: " + path);
    int nilp = -1;
    std::vector<std::string> classes;
    std::vector<std::string> vanish_raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "rho_nilpotence") {
            if (!(ls >> nilp)) throw PresetError("line " + std::to_string(lineno) + ": expected integer");
        } else if (key == "class") {
            std::string c;
            while (ls >> c) classes.push_back(c);
        } else if (key == "vanish") {
            std::string v;
            while (ls >> v) vanish_raw.push_back(v);
        } else {
            throw PresetError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (nilp < 1) throw PresetError("preset file misses rho_nilpotence");
    auto p = custom(nilp, classes, {}, "custom");
    // parse vanishing monomials like a*a or rho^2*u against the class list
    std::vector<std::vector<uint8_t>> vanishing;
    for (const auto& mono : vanish_raw) {
        std::vector<int> exps(p->num_classes(), 0);
        std::istringstream ms(mono);
        std::string factor;
        while (std::getline(ms, factor, '*')) {
            std::string cls = factor;
            int e = 1;
            auto caret = factor.find('^');
            if (caret != std::string::npos) {
                cls = factor.substr(0, caret);
                e = std::stoi(factor.substr(caret + 1));
            }
            bool found = false;
            for (int i = 0; i < p->num_classes(); ++i)
                if (p->class_names()[i] == cls) {
                    exps[i] += e;
                    found = true;
                }
            if (!found) throw PresetError("vanish refers to unknown class '" + cls + "'");
        }
        vanishing.push_back(std::vector<uint8_t>(exps.begin(), exps.end()));
    }
    return custom(nilp, std::vector<std::string>(p->class_names().begin() + 1, p->class_names().end()),
                  std::move(vanishing), "custom");
}

PresetPtr FieldPreset::by_flag(const std::string& flag) {
    if (flag == "qcl") return qcl();
    if (flag == "fq1") return fq1();
    if (flag == "fq3") return fq3();
    if (flag.rfind("custom:", 0) == 0) return custom_from_file(flag.substr(7));
    throw PresetError("unknown field preset '" + flag + "' (want qcl|fq1|fq3|custom:<file>)");
}

KM2Element km_add(const KM2Element& a, const KM2Element& b) {
    if (a.preset != b.preset) throw PresetError("k^M addition across presets");
    KM2Element r{a.preset, {}};
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i] < b.terms[j]))
            r.terms.push_back(a.terms[i++]);
        else if (i == a.terms.size() || b.terms[j] < a.terms[i])
            r.terms.push_back(b.terms[j++]);
        else {
            ++i;
            ++j;
        }
    }
    return r;
}

KM2Element km_mul(const KM2Element& a, const KM2Element& b) {
    if (a.preset != b.preset) throw PresetError("k^M product across presets");
    std::vector<KM2Mono> acc;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms)
            if (auto m = a.preset->mono_mul(x, y)) acc.push_back(*m);
    std::sort(acc.begin(), acc.end());
    KM2Element r{a.preset, {}};
    for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) % 2) r.terms.push_back(acc[i]);
        i = j;
    }
    return r;
}

}  // namespace wsteen
