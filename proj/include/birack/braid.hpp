#pragma once

// Virtual braid words and their switch-pair evaluation.
//
// Words are written in the generators s1, s2, ... (classical crossings,
// '-si' for the negative crossing) and t1, t2, ... (virtual crossings).
// A word acts on tuples of colors, leftmost letter first.
//
// The action of a single letter on strands (i, i+1) carrying colors (a, b)
// sends the pair through the crossing:
//
//   si:   (a, b) -> (b_a, a^b)
//   -si:  the inverse of that map
//   ti:   the same shape of map built from T instead of S
//
// i.e. the outgoing left strand is the old right color pushed down by the
// old left one, and vice versa.  Fixed points of the whole word action are
// the switch colorings of the braid closure.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birack/core.hpp"

namespace birack::braid {

struct Letter {
    bool is_virtual = false;
    int index = 0;  // 1-based strand position
    int sign = 1;   // always +1 for virtual letters

    bool operator==(const Letter&) const = default;
};

struct Word {
    std::vector<Letter> letters;
    std::optional<int> declared_strands;

    bool operator==(const Word&) const = default;
};

// grammar per token: '-'? ('s'|'t') INDEX ('^' POWER)? — tokens separated by
// whitespace.  '-t' is accepted (virtual crossings are self-inverse) with a
// warning pushed to `warnings` when given.
Word parse(const std::string& text,
           std::vector<std::string>* warnings = nullptr);

// one token per letter, powers never re-compressed: "s1 -s2 t1"
std::string format(const Word& w);

Word inverse(const Word& w);
Word power(const Word& w, int k);
// x^{-1} y^{-1} x y
Word commutator(const Word& x, const Word& y);

// sum of classical crossing signs
int writhe(const Word& w);
// smallest strand count the word fits on (declared_strands wins if set)
int strands(const Word& w);

struct CountOptions {
    long long budget = 50'000'000;
    int workers = 1;
};

// action of the word on one color tuple
std::vector<int> evaluate(const Word& w, const SwitchPair& pair,
                          int strand_count, std::vector<int> tuple);

// number of tuples in X^strands fixed by the word action
long long fixed_point_count(const Word& w, const SwitchPair& pair,
                            int strand_count, const CountOptions& opts = {});

// the 7-strand test braid of the essential-pair separation theorem: the
// commutator braid on 6 strands followed by "t1 s2 t3 t4 t5 t6", cubed
Word theorem53_braid();

// word files: one word per line, "<name> <letters...>"; '#' starts a comment
std::map<std::string, Word> load_words_file(const std::string& path);

}  // namespace birack::braid
