// morphisms.hpp -- substitutions on {D,E}, the a/b doubling word, the
// reduce-and-expand pipeline, periodicity detection, desubstitution.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvtk/blocks.hpp"
#include "bvtk/diagram.hpp"

namespace bvtk {

struct Morphism {
  std::map<char, std::string> images;
};

// E -> E^2 D E^(2j-5), D -> E D E^(2j-4); both images have length 2j-2.
Morphism tau(int j);  // j >= 3

// Concatenation of images; unknown letters are an error.
std::string apply(const Morphism& m, const std::string& w);

// Length-L prefix of the fixed point of a -> ab, b -> ba starting from a.
std::string ptm_word(Dim L);

// Vertex coding -> {D,E}: the third column of the level maps to D, everything
// else to E. The block must be over a level's vertex alphabet.
std::string phi_factor(const Diagram& d, const Block& coding);

// Starting from the in-edge word of v(n,1), keep only the second and third
// columns (E and D, all else 0) and expand level by level down to level 2;
// a 0 expands to a run of 0s of the in-degree's length.
std::string tilde_reduction(const Diagram& d, int n);  // n >= 3

struct PowerForm {
  std::string period;
  int power = 0;      // >= 2
  std::string tail;   // proper prefix of period, possibly empty
};
// Shortest-period factorization w = P^k Q with k >= 2, or none.
std::optional<PowerForm> power_form(const std::string& w);

// Parse of w as a window of some tau(j) image concatenation with no DD in
// the upper word. Every alignment offset is tried; complete image blocks
// force their letter, so each feasible alignment yields one factorization.
// `count` is the number of those factorizations; the partial edge blocks
// must admit some consistent letter but a choice there does not multiply
// the count. `factorization` lists the complete blocks (letter, start) of
// the unique parse.
struct ParseResult {
  enum class Kind { Unique, Ambiguous, NoParse };
  Kind kind = Kind::NoParse;
  std::vector<std::pair<char, int>> factorization;
  long count = 0;
};
ParseResult desubstitute(const std::string& w, int j);  // j >= 3

}  // namespace bvtk
