#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/game.hpp"
#include "workbench/strategy.hpp"

namespace workbench {

/// Built-in reference game with documented values; fixtures for everything
/// else. Exactly one of `game` / `multiround` is populated.
struct CatalogEntry {
    std::string name;
    std::optional<GameSpec> game;
    std::optional<MultiRoundGameSpec> multiround;
    std::optional<DeterministicStrategy> classical_strategy;
    std::optional<EntangledStrategy> entangled_strategy;
    std::optional<Rational> documented_classical_value;
    std::optional<double> documented_entangled_value;
};

/// Binary parity game with AND condition: 2 questions and answers per side,
/// uniform pair distribution, win iff a XOR a' = q AND q'. Classical value
/// 3/4; bundled optimal-angle strategy reaches cos^2(pi/8).
CatalogEntry chsh();

/// Rows-vs-columns grid game: 6 questions (3 rows then 3 columns), 3-bit
/// answers with even row / odd column parity, intersection consistency.
/// Classical value 17/18; bundled d=4 strategy wins with probability 1.
CatalogEntry magic_square();

/// n-vertex cycle coloring game (n odd): uniform over same-vertex and edge
/// question pairs, equality resp. difference predicate. Classical value
/// 1 - 1/(2n).
CatalogEntry odd_cycle(std::size_t n);

/// Fixed r-round single-prover fixture, |Q|=|A|=2, uniform questions: round k
/// must announce the next round's question (the last round echoes its own),
/// so early answers are blind guesses. Value computed exactly at build time.
CatalogEntry toy_multiround(std::size_t r);

std::vector<std::string> catalog_names();
CatalogEntry catalog_get(const std::string& name);

}  // namespace workbench
