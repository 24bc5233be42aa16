#pragma once

// Permutations and permutation groups given by generators. Orbitals are
// computed by breadth-first closure on ordered pairs, so nothing here ever
// needs the group's elements except group_order_by_enumeration, which is a
// deliberate brute-force oracle with an order cap.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "imprim/arith.hpp"

namespace imprim {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Perm {
public:
    Perm() = default;

    explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (std::uint32_t v : images_) {
            if (v >= images_.size() || seen[v])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    static Perm identity(std::uint32_t degree) {
        std::vector<std::uint32_t> im(degree);
        std::iota(im.begin(), im.end(), 0u);
        return Perm(std::move(im));
    }

    std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator[](std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    Perm inverse() const {
        std::vector<std::uint32_t> im(images_.size());
        for (std::uint32_t x = 0; x < images_.size(); ++x) im[images_[x]] = x;
        return Perm(std::move(im));
    }

    // (p * q)(x) = q(p(x)): apply p first.
    friend Perm operator*(const Perm& p, const Perm& q) {
        std::vector<std::uint32_t> im(p.images_.size());
        for (std::uint32_t x = 0; x < im.size(); ++x) im[x] = q.images_[p.images_[x]];
        return Perm(std::move(im));
    }

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint32_t> images_;
};

struct GeneratorSet {
    std::uint32_t degree = 0;
    std::vector<Perm> generators;

    GeneratorSet(std::uint32_t deg, std::vector<Perm> gens)
        : degree(deg), generators(std::move(gens)) {
        if (generators.empty()) throw std::invalid_argument("GeneratorSet: no generators");
        for (const Perm& g : generators)
            if (g.degree() != degree)
                throw std::invalid_argument("GeneratorSet: degree mismatch");
    }
};

inline GeneratorSet cyclic_gens(std::uint32_t d) {
    std::vector<std::uint32_t> im(d);
    for (std::uint32_t i = 0; i < d; ++i) im[i] = (i + 1) % d;
    return GeneratorSet(d, {Perm(std::move(im))});
}

inline GeneratorSet symmetric_gens(std::uint32_t d) {
    if (d < 2) return GeneratorSet(d, {Perm::identity(d)});
    std::vector<std::uint32_t> cyc(d), swp(d);
    for (std::uint32_t i = 0; i < d; ++i) { cyc[i] = (i + 1) % d; swp[i] = i; }
    swp[0] = 1; swp[1] = 0;
    return GeneratorSet(d, {Perm(std::move(swp)), Perm(std::move(cyc))});
}

// Orbit partition of the domain under <generators>, ordered by least point.
inline std::vector<std::vector<std::uint32_t>> orbits(const GeneratorSet& g) {
    std::vector<bool> seen(g.degree, false);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t start = 0; start < g.degree; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> orb{start};
        seen[start] = true;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const Perm& p : g.generators) {
                std::uint32_t y = p[orb[i]];
                if (!seen[y]) { seen[y] = true; orb.push_back(y); }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

inline bool is_transitive(const GeneratorSet& g) {
    return orbits(g).size() == 1;
}

// All non-trivial orbitals of a transitive group, by BFS on ordered pairs.
// Labels are canonical: orbital L contains the L-th smallest "least pair"
// (lexicographic), so label assignment is deterministic.
class OrbitalDecomposition {
public:
    explicit OrbitalDecomposition(const GeneratorSet& g) : degree_(g.degree) {
        if (!is_transitive(g))
            throw std::invalid_argument("orbitals: group is not transitive");
        const std::uint64_t n2 = static_cast<std::uint64_t>(degree_) * degree_;
        label_.assign(n2, -1);
        std::vector<std::uint64_t> queue;
        for (std::uint64_t start = 0; start < n2; ++start) {
            if (start % (degree_ + 1) == 0) continue;  // diagonal: trivial orbital
            if (label_[start] != -1) continue;
            const std::int32_t lab = static_cast<std::int32_t>(rep_.size());
            rep_.push_back(start);
            size_.push_back(0);
            queue.clear();
            queue.push_back(start);
            label_[start] = lab;
            while (!queue.empty()) {
                std::uint64_t pr = queue.back();
                queue.pop_back();
                ++size_.back();
                std::uint32_t x = static_cast<std::uint32_t>(pr / degree_);
                std::uint32_t y = static_cast<std::uint32_t>(pr % degree_);
                for (const Perm& p : g.generators) {
                    std::uint64_t img = static_cast<std::uint64_t>(p[x]) * degree_ + p[y];
                    if (label_[img] == -1) {
                        label_[img] = lab;
                        queue.push_back(img);
                    }
                }
            }
        }
        pairing_.resize(rep_.size());
        subdegree_.resize(rep_.size());
        for (std::size_t lab = 0; lab < rep_.size(); ++lab) {
            std::uint64_t r = rep_[lab];
            std::uint64_t rev = (r % degree_) * degree_ + r / degree_;
            pairing_[lab] = static_cast<std::uint32_t>(label_[rev]);
            if (size_[lab] % degree_ != 0)
                throw std::logic_error("orbitals: orbital size not divisible by degree");
            subdegree_[lab] = size_[lab] / degree_;
        }
        for (std::size_t lab = 0; lab < rep_.size(); ++lab)
            if (pairing_[pairing_[lab]] != lab)
                throw std::logic_error("orbitals: pairing is not an involution");
    }

    std::uint32_t degree() const { return degree_; }
    std::uint32_t num_nontrivial() const { return static_cast<std::uint32_t>(rep_.size()); }

    // Label of the orbital containing (x, y), x != y.
    std::uint32_t orbital_id(std::uint32_t x, std::uint32_t y) const {
        if (x == y) throw std::invalid_argument("orbital_id: diagonal pair");
        return static_cast<std::uint32_t>(label_[static_cast<std::uint64_t>(x) * degree_ + y]);
    }

    std::uint32_t pairing(std::uint32_t lab) const { return pairing_[lab]; }
    bool self_paired(std::uint32_t lab) const { return pairing_[lab] == lab; }
    std::uint64_t subdegree(std::uint32_t lab) const { return subdegree_[lab]; }

    std::uint64_t sym_subdegree(std::uint32_t lab) const {
        return (self_paired(lab) ? 1 : 2) * subdegree_[lab];
    }

    std::uint32_t rank() const { return num_nontrivial() + 1; }

    std::uint32_t pair_rank() const {
        std::uint32_t n = 0;
        for (std::uint32_t lab = 0; lab < num_nontrivial(); ++lab)
            if (lab <= pairing_[lab]) ++n;
        return n;
    }

    // Representatives of the {Delta, Delta*} classes, by least label.
    std::vector<std::uint32_t> pair_class_reps() const {
        std::vector<std::uint32_t> reps;
        for (std::uint32_t lab = 0; lab < num_nontrivial(); ++lab)
            if (lab <= pairing_[lab]) reps.push_back(lab);
        return reps;
    }

    // Suborbit Delta(alpha) for a given label and base point.
    std::vector<std::uint32_t> suborbit(std::uint32_t lab, std::uint32_t alpha) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t y = 0; y < degree_; ++y)
            if (y != alpha && orbital_id(alpha, y) == lab) out.push_back(y);
        return out;
    }

private:
    std::uint32_t degree_;
    std::vector<std::int32_t> label_;        // row-major (x, y) -> label; -1 on diagonal
    std::vector<std::uint64_t> rep_;         // least pair per label
    std::vector<std::uint64_t> size_;
    std::vector<std::uint32_t> pairing_;
    std::vector<std::uint64_t> subdegree_;
};

inline OrbitalDecomposition orbitals(const GeneratorSet& g) { return OrbitalDecomposition(g); }

inline std::uint32_t rank(const GeneratorSet& g) { return OrbitalDecomposition(g).rank(); }
inline std::uint32_t pair_rank(const GeneratorSet& g) { return OrbitalDecomposition(g).pair_rank(); }

struct ThreeHalvesResult {
    bool is_three_halves = false;
    std::uint64_t common_subdegree = 0;
};

inline ThreeHalvesResult is_three_halves_transitive(const OrbitalDecomposition& od) {
    if (od.num_nontrivial() == 0) return {true, 0};
    std::uint64_t s = od.subdegree(0);
    for (std::uint32_t lab = 1; lab < od.num_nontrivial(); ++lab)
        if (od.subdegree(lab) != s) return {false, 0};
    return {true, s};
}

inline ThreeHalvesResult is_three_halves_transitive(const GeneratorSet& g) {
    return is_three_halves_transitive(OrbitalDecomposition(g));
}

// Exhaustive element closure. Elements are stored contiguously (degree
// uint16 entries each) and deduplicated through an open-addressing index.
// The visitor, if given, sees each element exactly once.
inline std::uint64_t enumerate_group(
    const GeneratorSet& g, std::uint64_t order_cap,
    const std::function<void(std::span<const std::uint16_t>)>& visitor = {}) {
    const std::uint32_t deg = g.degree;
    if (deg >= (1u << 16))
        throw ResourceError("enumerate_group: degree too large for element storage");

    std::vector<std::uint16_t> arena;
    std::vector<std::uint32_t> slots;  // 1-based element ids, 0 = empty
    std::size_t slot_mask = 0;
    std::uint64_t count = 0;

    auto element = [&](std::uint64_t id) {
        return arena.data() + id * deg;
    };
    auto hash_of = [&](const std::uint16_t* e) {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint32_t i = 0; i < deg; ++i) {
            h ^= e[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    };
    auto rehash = [&](std::size_t new_size) {
        slots.assign(new_size, 0);
        slot_mask = new_size - 1;
        for (std::uint64_t id = 0; id < count; ++id) {
            std::size_t pos = hash_of(element(id)) & slot_mask;
            while (slots[pos] != 0) pos = (pos + 1) & slot_mask;
            slots[pos] = static_cast<std::uint32_t>(id + 1);
        }
    };
    // Inserts if new; returns true when inserted.
    auto insert = [&](const std::uint16_t* e) {
        std::size_t pos = hash_of(e) & slot_mask;
        while (slots[pos] != 0) {
            const std::uint16_t* other = element(slots[pos] - 1);
            if (std::equal(e, e + deg, other)) return false;
            pos = (pos + 1) & slot_mask;
        }
        slots[pos] = static_cast<std::uint32_t>(count + 1);
        constexpr std::uint64_t kByteBudget = 6ull << 30;
        if ((count + 1) * static_cast<std::uint64_t>(deg) * 2 > kByteBudget)
            throw ResourceError("enumerate_group: memory budget exceeded");
        arena.insert(arena.end(), e, e + deg);
        ++count;
        if (count * 10 >= slots.size() * 7) rehash(slots.size() * 2);
        return true;
    };

    rehash(1024);
    std::vector<std::uint16_t> idel(deg), img(deg);
    for (std::uint32_t i = 0; i < deg; ++i) idel[i] = static_cast<std::uint16_t>(i);
    insert(idel.data());
    if (visitor) visitor(std::span<const std::uint16_t>(element(0), deg));

    for (std::uint64_t next = 0; next < count; ++next) {
        for (const Perm& p : g.generators) {
            const std::uint16_t* e = element(next);
            for (std::uint32_t x = 0; x < deg; ++x)
                img[x] = static_cast<std::uint16_t>(p[e[x]]);
            if (insert(img.data())) {
                if (count > order_cap)
                    throw ResourceError("enumerate_group: order cap exceeded");
                if (visitor) visitor(std::span<const std::uint16_t>(element(count - 1), deg));
            }
        }
    }
    return count;
}

inline BigCount group_order_by_enumeration(const GeneratorSet& g,
                                           std::uint64_t order_cap = 10'000'000) {
    return BigCount(enumerate_group(g, order_cap));
}

}  // namespace imprim
