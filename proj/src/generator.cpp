// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monoterm/generator.hpp"

#include <cstdio>

#include "monoterm/classifier.hpp"
#include "monoterm/decider_diagonal.hpp"
#include "monoterm/decider_multipath.hpp"
#include "monoterm/parser.hpp"

namespace monoterm::gen {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(engine_());
    }
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + engine_() % span);
}

std::optional<ShapeMix> parse_shape(const std::string& s) {
    if (s == "single") return ShapeMix::Single;
    if (s == "diagonal") return ShapeMix::Diagonal;
    if (s == "multipath") return ShapeMix::Multipath;
    if (s == "mix") return ShapeMix::Mix;
    return std::nullopt;
}

namespace {

RelOp random_op(Rng& rng) { return static_cast<RelOp>(rng.uniform(0, 3)); }

RelOp op_for(Rng& rng, Bound b) {
    const bool strict = rng.chance(1, 2);
    if (b == Bound::Below) {
        return strict ? RelOp::Gt : RelOp::Ge;
    }
    return strict ? RelOp::Lt : RelOp::Le;
}

std::int64_t nonzero(Rng& rng, std::int64_t bound) {
    const std::int64_t m = rng.uniform(1, std::max<std::int64_t>(bound, 1));
    return rng.chance(1, 2) ? m : -m;
}

// Any update of the syntactic fragment: constant, additive, geometric or
// affine, with the occasional identity.
Update random_update(Rng& rng, std::int64_t bound) {
    switch (rng.uniform(0, 9)) {
    case 0:
    case 1: return {0, rng.uniform(-bound, bound)};
    case 2:
    case 3:
    case 4: return {1, nonzero(rng, bound)};
    case 5:
    case 6: return {rng.uniform(2, 3), 0};
    case 7:
    case 8: return {rng.uniform(2, 3), nonzero(rng, bound)};
    default: return {1, 0};
    }
}

// An update likely (not certain) to move in direction `t` on some region.
Update update_for(Rng& rng, Trend t, std::int64_t bound) {
    if (t == Trend::Const) {
        return {0, rng.uniform(-bound, bound)};
    }
    const std::int64_t mag = rng.uniform(1, std::max<std::int64_t>(bound, 1));
    switch (rng.uniform(0, 3)) {
    case 0:
    case 1: return {1, t == Trend::Up ? mag : -mag};
    case 2: return {rng.uniform(2, 3), 0};
    default: return {rng.uniform(2, 3), nonzero(rng, bound)};
    }
}

// Prefers a start value satisfying the guard.
IntVal start_value(Rng& rng, const DiagonalFree& guard, std::int64_t bound) {
    for (int i = 0; i < 8; ++i) {
        const std::int64_t x = rng.uniform(-bound, bound);
        if (guard.holds(x) || rng.chance(1, 10)) {
            return x;
        }
    }
    return rng.uniform(-bound, bound);
}

LoopProgram single(Rng& rng, std::int64_t bound) {
    SinglePathDF s{{"x", random_op(rng), rng.uniform(-bound, bound)}, random_update(rng, bound)};
    const IntVal x0 = start_value(rng, s.guard, bound);
    return {s, {{"x", x0}}};
}

LoopProgram diagonal(Rng& rng, std::int64_t bound) {
    SinglePathDiag s{{"x", "y", random_op(rng), 0}, random_update(rng, bound), random_update(rng, bound)};
    const std::int64_t x0 = rng.uniform(-bound, bound);
    const std::int64_t y0 = rng.uniform(-bound, bound);
    for (int i = 0; i < 8; ++i) {
        s.guard.bound = rng.uniform(-bound, bound);
        if (s.guard.holds(x0, y0) || rng.chance(1, 10)) {
            break;
        }
    }
    return {s, {{"x", x0}, {"y", y0}}};
}

LoopProgram multipath(Rng& rng, std::int64_t bound, const MultiPathDF& proto) {
    MultiPathDF s = proto;
    s.guard.bound = rng.uniform(-bound, bound);
    s.cond.bound = rng.uniform(-bound, bound);
    const IntVal x0 = start_value(rng, s.guard, bound);
    return {s, {{"x", x0}}};
}

LoopProgram multipath(Rng& rng, std::int64_t bound) {
    MultiPathDF proto{{"x", random_op(rng), 0}, {"x", random_op(rng), 0}, random_update(rng, bound),
                      random_update(rng, bound)};
    return multipath(rng, bound, proto);
}

std::vector<CaseKey> keys_for(int target) {
    std::vector<CaseKey> out;
    for (Bound g : {Bound::Below, Bound::Above}) {
        for (Bound c : {Bound::Below, Bound::Above}) {
            for (Trend t1 : {Trend::Up, Trend::Down, Trend::Const}) {
                for (Trend t2 : {Trend::Up, Trend::Down, Trend::Const}) {
                    const CaseKey k{g, c, t1, t2};
                    const int row = case_row(k);
                    const int group = row >= 33 ? 33 : row >= 29 ? 29 : row >= 25 ? 25 : row;
                    if (group == target) {
                        out.push_back(k);
                    }
                }
            }
        }
    }
    return out;
}

VarClass coarse(const MonotoneClass& cls) {
    switch (cls.direction) {
    case Direction::Flat: return VarClass::Const;
    case Direction::Up: return cls.family == Family::Ra ? VarClass::LinearUp : VarClass::ExpUp;
    case Direction::Down: return cls.family == Family::Ra ? VarClass::LinearDown : VarClass::ExpDown;
    }
    return VarClass::Const;
}

Update update_for(Rng& rng, VarClass c, std::int64_t bound) {
    switch (c) {
    case VarClass::Const: return rng.chance(1, 4) ? Update{1, 0} : Update{0, rng.uniform(-bound, bound)};
    case VarClass::LinearUp: return {1, rng.uniform(1, bound)};
    case VarClass::LinearDown: return {1, -rng.uniform(1, bound)};
    case VarClass::ExpUp:
    case VarClass::ExpDown: break;
    }
    return {rng.uniform(2, 3), rng.chance(1, 2) ? 0 : nonzero(rng, bound)};
}

} // namespace

LoopProgram random_program(Rng& rng, ShapeMix shape, std::int64_t bound) {
    if (shape == ShapeMix::Mix) {
        shape = static_cast<ShapeMix>(rng.uniform(0, 2));
    }
    switch (shape) {
    case ShapeMix::Single: return single(rng, bound);
    case ShapeMix::Diagonal: return diagonal(rng, bound);
    default: return multipath(rng, bound);
    }
}

const std::vector<int>& row_targets() {
    static const std::vector<int> targets = [] {
        std::vector<int> t;
        for (int r = 1; r <= 25; ++r) {
            t.push_back(r);
        }
        t.push_back(29);
        t.push_back(33);
        return t;
    }();
    return targets;
}

std::optional<int> row_target_of(const LoopProgram& p) {
    const auto* m = std::get_if<MultiPathDF>(&p.shape);
    if (m == nullptr) {
        return std::nullopt;
    }
    try {
        const auto [t, e] = classify_branches(*m, p.init.at(m->guard.var));
        const int row = case_row(case_key(*m, t, e));
        return row >= 33 ? 33 : row >= 29 ? 29 : row >= 25 ? 25 : row;
    } catch (const UnsupportedError&) {
        return std::nullopt;
    }
}

std::string_view to_string(VarClass c) {
    switch (c) {
    case VarClass::Const: return "const";
    case VarClass::LinearUp: return "linear-up";
    case VarClass::LinearDown: return "linear-down";
    case VarClass::ExpUp: return "exp-up";
    case VarClass::ExpDown: return "exp-down";
    }
    return "?";
}

const std::vector<ClassPair>& class_pairs() {
    static const std::vector<ClassPair> pairs = [] {
        std::vector<ClassPair> out;
        for (int x = 0; x < 5; ++x) {
            for (int y = 0; y < 5; ++y) {
                out.push_back({static_cast<VarClass>(x), static_cast<VarClass>(y)});
            }
        }
        return out;
    }();
    return pairs;
}

std::optional<ClassPair> class_pair_of(const LoopProgram& p) {
    const auto* d = std::get_if<SinglePathDiag>(&p.shape);
    if (d == nullptr) {
        return std::nullopt;
    }
    const SinglePathDiag q = normalize_direction(*d);
    try {
        return ClassPair{coarse(classify(q.update_lhs, p.init.at(q.guard.lhs))),
                         coarse(classify(q.update_rhs, p.init.at(q.guard.rhs)))};
    } catch (const UnsupportedError&) {
        return std::nullopt;
    }
}

std::optional<LoopProgram> for_row(Rng& rng, int target, std::int64_t bound, int tries) {
    const std::vector<CaseKey> keys = keys_for(target);
    if (keys.empty()) {
        return std::nullopt;
    }
    for (int i = 0; i < tries; ++i) {
        const CaseKey& k = keys[rng.uniform(0, static_cast<std::int64_t>(keys.size()) - 1)];
        const MultiPathDF proto{{"x", op_for(rng, k.guard), 0},
                                {"x", op_for(rng, k.cond), 0},
                                update_for(rng, k.then_trend, bound),
                                update_for(rng, k.else_trend, bound)};
        LoopProgram p = multipath(rng, bound, proto);
        if (row_target_of(p) == target) {
            return p;
        }
    }
    return std::nullopt;
}

std::optional<LoopProgram> for_pair(Rng& rng, ClassPair pair, std::int64_t bound, int tries) {
    for (int i = 0; i < tries; ++i) {
        // Draw in normalized orientation, then flip half of the loops so
        // both guard directions occur.
        SinglePathDiag s{{"x", "y", op_for(rng, Bound::Below), 0}, update_for(rng, pair.x, bound),
                         update_for(rng, pair.y, bound)};
        const std::int64_t x0 = rng.uniform(-bound, bound);
        const std::int64_t y0 = rng.uniform(-bound, bound);
        for (int j = 0; j < 8; ++j) {
            s.guard.bound = rng.uniform(-bound, bound);
            if (s.guard.holds(x0, y0) || rng.chance(1, 10)) {
                break;
            }
        }
        LoopProgram p{s, {{"x", x0}, {"y", y0}}};
        if (rng.chance(1, 2)) {
            // (x - y > c)  <=>  (y - x < -c)
            p.shape = SinglePathDiag{{"y", "x", mirror(s.guard.op), -s.guard.bound}, s.update_rhs, s.update_lhs};
        }
        if (class_pair_of(p) == pair) {
            return p;
        }
    }
    return std::nullopt;
}

std::vector<CorpusFile> generate_corpus(const CorpusOptions& opts) {
    Rng rng(opts.seed);
    std::vector<LoopProgram> programs;
    if (opts.cover_rows) {
        if (opts.shape == ShapeMix::Multipath || opts.shape == ShapeMix::Mix) {
            for (int t : row_targets()) {
                if (auto p = for_row(rng, t, opts.bound)) {
                    programs.push_back(std::move(*p));
                }
            }
        }
        if (opts.shape == ShapeMix::Diagonal || opts.shape == ShapeMix::Mix) {
            for (const ClassPair& pair : class_pairs()) {
                if (auto p = for_pair(rng, pair, opts.bound)) {
                    programs.push_back(std::move(*p));
                }
            }
        }
    }
    if (programs.size() > opts.count) {
        programs.resize(opts.count);
    }
    while (programs.size() < opts.count) {
        programs.push_back(random_program(rng, opts.shape, opts.bound));
    }
    std::vector<CorpusFile> files;
    files.reserve(programs.size());
    for (std::size_t i = 0; i < programs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "loop_%04zu.loop", i);
        std::string text = "# generated: seed " + std::to_string(opts.seed) + ", index " + std::to_string(i) + "\n";
        if (auto t = row_target_of(programs[i])) {
            text += "# rule-table target " + std::to_string(*t) + "\n";
        } else if (auto pair = class_pair_of(programs[i])) {
            text += "# class pair " + std::string(to_string(pair->x)) + " / " + std::string(to_string(pair->y)) + "\n";
        }
        files.push_back({name, text + print(programs[i])});
    }
    return files;
}

} // namespace monoterm::gen
