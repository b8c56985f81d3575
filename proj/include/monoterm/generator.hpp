// Copyright (c) monoterm contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monoterm/loop_model.hpp"

namespace monoterm::gen {

/// Seeded source of integers. Bounded draws are done here rather than with
/// std::uniform_int_distribution so that output is identical across standard
/// libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return engine_() % den < num; }

  private:
    std::mt19937_64 engine_;
};

enum class ShapeMix { Single, Diagonal, Multipath, Mix };

std::optional<ShapeMix> parse_shape(const std::string& s);

/// A loop of the given shape with every constant in [-bound, bound] and
/// multipliers in {2, 3}.
LoopProgram random_program(Rng& rng, ShapeMix shape, std::int64_t bound);

/// Rule-table targets: rows 1..24, then the groups 25 (rows 25-28),
/// 29 (rows 29-32) and 33 (rows 33-36).
const std::vector<int>& row_targets();

/// Target a multipath loop falls into, or nullopt when its branches cannot
/// be classified.
std::optional<int> row_target_of(const LoopProgram& p);

/// Coarse class of one diagonal variable.
enum class VarClass { Const, LinearUp, LinearDown, ExpUp, ExpDown };

std::string_view to_string(VarClass c);

struct ClassPair {
    VarClass x = VarClass::Const;
    VarClass y = VarClass::Const;
    friend bool operator==(const ClassPair&, const ClassPair&) = default;
};

/// All 25 pairs.
const std::vector<ClassPair>& class_pairs();

/// Pair of a diagonal loop after its guard is normalized to a lower bound.
std::optional<ClassPair> class_pair_of(const LoopProgram& p);

/// Rejection-samples a loop for the target; nullopt if `tries` draws miss.
std::optional<LoopProgram> for_row(Rng& rng, int target, std::int64_t bound, int tries = 10'000);
std::optional<LoopProgram> for_pair(Rng& rng, ClassPair pair, std::int64_t bound, int tries = 10'000);

struct CorpusOptions {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    ShapeMix shape = ShapeMix::Mix;
    std::int64_t bound = 20;
    /// Start with one loop per rule-table target (multipath) and per class
    /// pair (diagonal) before drawing at random.
    bool cover_rows = false;
};

struct CorpusFile {
    std::string name;
    std::string text;
};

std::vector<CorpusFile> generate_corpus(const CorpusOptions& opts);

} // namespace monoterm::gen
