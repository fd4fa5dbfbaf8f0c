#include "hmp/holonomy.hpp"

#include <algorithm>
#include <stdexcept>

#include "hmp/errors.hpp"

namespace hmp {

void FiniteGroup::validate() {
    n_ = static_cast<int>(table_.size());
    if (n_ < 1) throw schema_error("group table must be nonempty");
    if (n_ > 12) throw schema_error("group order must be <= 12");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_)
            throw schema_error("group table must be square");
        for (int v : row)
            if (v < 0 || v >= n_) throw schema_error("group table entry out of range");
    }
    e_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x)
            ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            e_ = e;
            break;
        }
    }
    if (e_ < 0) throw schema_error("group table has no identity");
    for (int x = 0; x < n_; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n_ && !has_inverse; ++y)
            has_inverse = mul(x, y) == e_ && mul(y, x) == e_;
        if (!has_inverse) throw schema_error("group table element has no inverse");
    }
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw schema_error("group table is not associative");
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) labels_.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw schema_error("label count must match group order");
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
    FiniteGroup g;
    g.table_ = std::move(table);
    g.labels_ = std::move(labels);
    g.validate();
    return g;
}

FiniteGroup FiniteGroup::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("table"))
        throw schema_error("group JSON must be an object with a \"table\" field");
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw schema_error("group table entries must be integers");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, {"I"}); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1 || n > 12) throw schema_error("cyclic: order must be in [1, 12]");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    std::vector<std::string> labels;
    labels.push_back("I");
    for (int i = 1; i < n; ++i) labels.push_back(i == 1 ? "A" : "A" + std::to_string(i));
    return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::klein_four() {
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
    return from_table(std::move(table), {"I", "A", "B", "AB"});
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "Z2") return cyclic(2);
    if (name == "Z3") return cyclic(3);
    if (name == "Z4") return cyclic(4);
    if (name == "Z6") return cyclic(6);
    if (name == "Z2xZ2") return klein_four();
    throw schema_error("unknown builtin group: " + name);
}

int FiniteGroup::inverse(int x) const {
    for (int y = 0; y < n_; ++y)
        if (mul(x, y) == e_) return y;
    throw std::logic_error("inverse: validated group lost an inverse");
}

int FiniteGroup::element_order(int x) const {
    int ord = 1, acc = x;
    while (acc != e_) {
        acc = mul(acc, x);
        ++ord;
    }
    return ord;
}

Endomorphism::Endomorphism(FiniteGroup g, std::vector<int> image)
    : g_(std::move(g)), img_(std::move(image)) {
    const int n = g_.order();
    if (static_cast<int>(img_.size()) != n)
        throw schema_error("endomorphism image size must equal the group order");
    for (int v : img_)
        if (v < 0 || v >= n) throw schema_error("endomorphism image entry out of range");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (img_[static_cast<std::size_t>(g_.mul(x, y))] !=
                g_.mul(img_[static_cast<std::size_t>(x)], img_[static_cast<std::size_t>(y)]))
                throw schema_error("image map is not a homomorphism");
}

bool Endomorphism::is_automorphism() const {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool Endomorphism::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Endomorphism Endomorphism::compose(const Endomorphism& o) const {
    if (!(g_ == o.g_)) throw std::invalid_argument("compose: different groups");
    std::vector<int> img(img_.size());
    for (std::size_t x = 0; x < img.size(); ++x)
        img[x] = img_[static_cast<std::size_t>(o.img_[x])];
    return Endomorphism(g_, std::move(img));
}

std::vector<int> gfix(const Endomorphism& psi) {
    std::vector<int> fix;
    for (int x = 0; x < psi.group().order(); ++x)
        if (psi(x) == x) fix.push_back(x);
    return fix;
}

unsigned endo_order(const Endomorphism& psi) {
    if (!psi.is_automorphism())
        throw std::invalid_argument("endo_order: map is not an automorphism");
    Endomorphism acc = psi;
    unsigned ord = 1;
    while (!acc.is_identity()) {
        acc = acc.compose(psi);
        ++ord;
        if (ord > 1u << 20) throw std::logic_error("endo_order: runaway iteration");
    }
    return ord;
}

namespace {

// Smallest generating set, greedily: repeatedly adjoin the first element
// outside the current closure.
std::vector<int> generating_set(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> gens;
    std::vector<bool> in_closure(static_cast<std::size_t>(n), false);
    in_closure[static_cast<std::size_t>(g.identity())] = true;
    int covered = 1;
    while (covered < n) {
        int next = -1;
        for (int x = 0; x < n; ++x)
            if (!in_closure[static_cast<std::size_t>(x)]) {
                next = x;
                break;
            }
        gens.push_back(next);
        // Recompute the closure of the generators.
        std::fill(in_closure.begin(), in_closure.end(), false);
        in_closure[static_cast<std::size_t>(g.identity())] = true;
        std::vector<int> frontier{g.identity()};
        covered = 1;
        while (!frontier.empty()) {
            std::vector<int> fresh;
            for (int x : frontier)
                for (int gen : gens) {
                    const int y = g.mul(x, gen);
                    if (!in_closure[static_cast<std::size_t>(y)]) {
                        in_closure[static_cast<std::size_t>(y)] = true;
                        fresh.push_back(y);
                        ++covered;
                    }
                }
            frontier = std::move(fresh);
        }
    }
    return gens;
}

// Extend generator images to the whole group; empty when inconsistent.
std::vector<int> extend_map(const FiniteGroup& g, const std::vector<int>& gens,
                            const std::vector<int>& gen_imgs) {
    const int n = g.order();
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    img[static_cast<std::size_t>(g.identity())] = g.identity();
    std::vector<int> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<int> fresh;
        for (int x : frontier)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const int y = g.mul(x, gens[gi]);
                const int iy = g.mul(img[static_cast<std::size_t>(x)], gen_imgs[gi]);
                int& slot = img[static_cast<std::size_t>(y)];
                if (slot == -1) {
                    slot = iy;
                    fresh.push_back(y);
                } else if (slot != iy) {
                    return {};
                }
            }
        frontier = std::move(fresh);
    }
    return img;
}

}  // namespace

std::vector<Endomorphism> fixed_point_free_autos(const FiniteGroup& g) {
    const int n = g.order();
    const std::vector<int> gens = generating_set(g);
    // Candidate images preserve element order (necessary for automorphisms).
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int y = 0; y < n; ++y)
            if (g.element_order(y) == g.element_order(gens[i])) candidates[i].push_back(y);

    std::vector<Endomorphism> out;
    std::vector<int> gen_imgs(gens.size(), 0);
    auto consider = [&]() {
        const std::vector<int> img = extend_map(g, gens, gen_imgs);
        if (img.empty()) return;
        for (int x = 0; x < n; ++x)
            if (x != g.identity() && img[static_cast<std::size_t>(x)] == x) return;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : img) {
            if (seen[static_cast<std::size_t>(v)]) return;
            seen[static_cast<std::size_t>(v)] = true;
        }
        try {
            out.emplace_back(g, img);  // validates the full homomorphism law
        } catch (const schema_error&) {
        }
    };
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        if (level == gens.size()) {
            consider();
            return;
        }
        for (int y : candidates[level]) {
            gen_imgs[level] = y;
            self(self, level + 1);
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(), [](const Endomorphism& a, const Endomorphism& b) {
        return a.image() < b.image();
    });
    return out;
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order();
    j["labels"] = g.labels();
    j["table"] = g.table();
    return j;
}

}  // namespace hmp
