#pragma once

#include <sstream>
#include <string>

#include "torsion/families.hpp"

namespace torsion {

enum class GapScriptMode { subgroups, cyclic };

inline const char* gap_script_mode_name(GapScriptMode m) {
    return m == GapScriptMode::subgroups ? "subgroups" : "cyclic";
}

// A runnable GAP session that rebuilds the group as a permutation image of
// the finitely presented torsion part times a cyclic factor, then counts
// all subgroups, or just the cyclic ones.
inline std::string gap_script(u64 n, u64 p, GapScriptMode mode) {
    if (n == 0 || p == 0) throw std::invalid_argument("gap_script: parameters must be positive");
    std::ostringstream o;
    o << "n:=" << n << ";\n"
      << "F:=FreeGroup(\"a\",\"b\");\n"
      << "a:=F.1;; b:=F.2;;\n"
      << "T:=F/[a^(2*n), b^2/a^n, b^(-1)*a*b*a];\n"
      << "i:=IsomorphismPermGroup(T);;\n"
      << "c:=CyclicGroup(" << p << ");\n"
      << "Tc:=DirectProduct(Image(i),c);\n"
      << "s:=AllSubgroups(Tc);;\n";
    if (mode == GapScriptMode::subgroups) {
        o << "Size(s);\n";
    } else {
        o << "x:=[];\n"
          << "for t in s do\n"
          << "  if IsCyclic(t) then\n"
          << "    Add(x,t);\n"
          << "  fi;\n"
          << "od;\n"
          << "Size(x);\n";
    }
    return o.str();
}

} // namespace torsion
