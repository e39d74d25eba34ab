#pragma once

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "fricke/poly.hpp"
#include "fricke/words.hpp"

namespace testutil {

inline fricke::Word W(int rank, std::string_view text) { return fricke::parse_word(rank, text); }

inline fricke::Polynomial P(int rank, std::string_view text) {
  return fricke::Polynomial::parse(rank, text);
}

// Rank-4 fixtures are written in the compact single-letter notation l..z for
// the 15 coordinates; expand to the canonical variable names.
inline std::string expand_f4(std::string_view compact) {
  static const char* names[26] = {};
  static bool init = false;
  static std::string table[26];
  if (!init) {
    const char* letters = "lmnopqrstuvwxyz";
    const char* full[15] = {"a",  "b",  "c",  "d",  "ab",  "ac",  "ad",  "bc",
                            "bd", "cd", "abc", "abd", "acd", "bcd", "abcd"};
    for (int i = 0; i < 15; ++i) table[letters[i] - 'a'] = full[i];
    (void)names;
    init = true;
  }
  std::string out;
  bool prev_factor = false;  // previous token was a variable or coefficient
  for (std::size_t i = 0; i < compact.size(); ++i) {
    char ch = compact[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '\n') continue;
    if (ch == '+' || ch == '-') {
      out += ' ';
      out += ch;
      out += ' ';
      prev_factor = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (prev_factor) out += '*';
      while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i])))
        out += compact[i++];
      --i;
      prev_factor = true;
    } else if (ch == '^') {
      out += '^';
      ++i;
      while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i])))
        out += compact[i++];
      --i;
      // exponent binds to the variable; keep prev_factor as-is
    } else {
      if (prev_factor) out += '*';
      out += table[ch - 'a'];
      prev_factor = true;
    }
  }
  return out;
}

inline fricke::Polynomial parse_f4(std::string_view compact) {
  return fricke::Polynomial::parse(4, expand_f4(compact));
}

inline fricke::Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(1, rank);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  int len = len_dist(rng);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    int g = gen_dist(rng);
    letters.push_back(sign_dist(rng) ? g : -g);
  }
  return fricke::Word(rank, std::move(letters));
}

inline std::vector<fricke::Nielsen> random_nielsen(std::mt19937_64& rng, int max_len) {
  static const fricke::Nielsen all[5] = {fricke::Nielsen::twist, fricke::Nielsen::twist_inv,
                                         fricke::Nielsen::swap12, fricke::Nielsen::rotate,
                                         fricke::Nielsen::invert};
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> pick(0, 4);
  std::vector<fricke::Nielsen> out;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) out.push_back(all[pick(rng)]);
  return out;
}

// ---- Printed generator fixtures (canonical n=3 names / compact l..z) ----

// The rank-3 relation abc^2 - P abc + Q with P, Q as in the Fricke lemma.
inline const char* fricke_relation_n3 =
    "a*b*c*abc - a*b*ab - a*c*ac - a*bc*abc - b*c*bc - b*ac*abc - c*ab*abc + ab*ac*bc"
    " + a^2 + b^2 + c^2 + ab^2 + ac^2 + bc^2 + abc^2 - 4";

inline const char* f4_py1 =
    "l^2m^2n^2o^2-l^2m^2nou-l^2mn^2ot-l^2mno^2s-lm^2n^2or-lm^2no^2q"
    "-lmn^2o^2p-l^2m^2n^2-l^2m^2o^2+l^2mntu+l^2mosu-l^2n^2o^2+l^2nost"
    "+lm^2nru+lm^2oqu+lmn^2rt+lmo^2qs+ln^2opt+lno^2ps-m^2n^2o^2+m^2noqr"
    "+mn^2opr+mno^2pq+2l^2mns+2l^2mot+2l^2nou-l^2stu+2lm^2nq+2lm^2or"
    "+2lmn^2p+2lmo^2p+lmpu^2-lmqtu-lmrsu+2ln^2or+2lno^2q-lnptu+lnqt^2"
    "-lnrst-lopsu-loqst+lors^2+2m^2nou-m^2qru+2mn^2ot+2mno^2s-mnpru"
    "-mnqrt+mnr^2s-mopqu+moq^2t-moqrs-n^2prt+nop^2u-nopqt-noprs-o^2pqs"
    "-l^2s^2-l^2t^2-l^2u^2-2lmqs-2lmrt-2lnps-2lnru-2lopt-2loqu-m^2q^2"
    "-m^2r^2-m^2u^2-2mnpq-2mntu-2mopr-2mosu-n^2p^2-n^2r^2-n^2t^2-2noqr"
    "-2nost-o^2p^2-o^2q^2-o^2s^2-p^2u^2+2pqtu+2prsu-q^2t^2+2qrst-r^2s^2"
    "-4lmp-4lnq-4lor-4mns-4mot-4nou+4pqs+4prt+4qru+4stu"
    "+4l^2+4m^2+4n^2+4o^2+4p^2+4q^2+4r^2+4s^2+4t^2+4u^2-16";

inline const char* f4_py2 =
    "lmnv-lmp-lnq-lsv-mns-mqv-npv+pqs+l^2+m^2+n^2+p^2+q^2+s^2+v^2-4";
inline const char* f4_py3 =
    "lmow-lmp-lor-ltw-mot-mrw-opw+prt+l^2+m^2+o^2+p^2+r^2+t^2+w^2-4";
inline const char* f4_py4 =
    "lnox-lnq-lor-lux-nou-nrx-oqx+qru+l^2+n^2+o^2+q^2+r^2+u^2+x^2-4";
inline const char* f4_py5 =
    "mnoy-mns-mot-muy-nou-nty-osy+stu+m^2+n^2+o^2+s^2+t^2+u^2+y^2-4";
inline const char* f4_py6 =
    "lmuz-lmp-lux-lyz-muy-mxz-puz+pxy+l^2+m^2+p^2+u^2+x^2+y^2+z^2-4";

}  // namespace testutil
