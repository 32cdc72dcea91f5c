#pragma once

#include "csp/system.hpp"

#include <cstdint>
#include <vector>

namespace csp {

/// G || H: synchronise G's right labels with H's left labels. States,
/// interfaces and inclusions are distributed (first operand fastest); the
/// span at (a, c, (i1,j1), (i2,j2)) is the sum over shared labels b of
/// G(a,b,i1,i2) x H(b,c,j1,j2), tagged with b. A passive operand (see
/// System::isPassive) next to an active one contributes identity spans on
/// each of its components, so its data rides along unchanged.
System parallel(const System& g, const System& h);

/// G o H: glue G's bottom interface to H's top interface. Labels become the
/// tagged disjoint unions A+C and B+D (G's first, prefixed "inl." / "inr.").
System sequential(const System& g, const System& h);

/// G . H: as sequential, but both operands share the parallel interfaces,
/// which are kept as they are.
System localSequential(const System& g, const System& h);

/// G + H: side by side over shared parallel interfaces; no spans between the
/// two state families.
System localSum(const System& g, const System& h);

/// G x H: labels, families and inclusions are all products; the span at
/// ((a,c),(b,d),(i1,j1),(i2,j2)) is G(a,b,i1,i2) x H(c,d,j1,j2). A trivial
/// label set {eps} is a unit for the label product. Passive operands are
/// treated as in parallel, which makes pred x id(N) move only the first
/// coordinate.
System product(const System& g, const System& h);

/// Merges labels through the given index maps, summing spans that land on
/// the same key. Used for the codiagonal A+A -> A.
System relabel(const System& g, const std::vector<std::size_t>& leftMap, LabelSet newLeft,
               const std::vector<std::size_t>& rightMap, LabelSet newRight);

/// The label codiagonal applied to a sequential composite of two systems
/// with equal label sets: inl.a and inr.a both become a.
System labelCodiagonal(const System& sequentialComposite, const LabelSet& left, const LabelSet& right);

/// Disjoint-union labels used by sequential composition.
LabelSet sumLabels(const LabelSet& a, const LabelSet& c);
LabelSet productLabels(const LabelSet& a, const LabelSet& c);

/// Central graphs isomorphic after truncation at natBound, with matching
/// label indices and pinned sequential interfaces. Throws SizeError when
/// either truncation has more than maxStates states.
bool isoAtBound(const System& g, const System& h, std::uint64_t natBound,
                std::size_t maxStates = 4096);

} // namespace csp
