#pragma once

#include <string>
#include <vector>

#include "cmposet/poset.hpp"
#include "cmposet/ring.hpp"

namespace cmposet {

/// A poset of sequences of vectors, each stored as rows.
struct SequencePoset {
    FinitePoset poset;
    std::vector<IntMatrix> sequences;
};

/// Words over integer letters ordered as subwords (ordered subsequences).
/// The family must be closed under nonempty subwords; heights are |w| - 1.
FinitePoset subword_poset(const std::vector<std::vector<int>>& words, std::vector<std::string> labels);

/// Every vector of F_p^n as a row, in lexicographic order of coordinates.
IntMatrix all_vectors(const ScalarRing& ring, int n, bool include_zero = false);

/// "1010" over F_p with p <= 10, "(1 -2 0)" otherwise.
std::string vector_text(const ScalarRing& ring, const IntMatrix& row);
/// "(v0,v1,...)" for a sequence stored as rows.
std::string sequence_text(const ScalarRing& ring, const IntMatrix& rows);

/// Rows of m selected by `which`, in that order.
IntMatrix select_rows(const IntMatrix& m, const std::vector<int>& which);

}  // namespace cmposet
