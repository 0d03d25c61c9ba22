#pragma once

#include "walks/stepset.hpp"

namespace models {

inline const char* const nsew = "N,S,E,W";
inline const char* const diagonal = "NE,NW,SE,SW";
inline const char* const six = "N,S,NE,SE,NW,SW";
inline const char* const eight = "N,S,E,W,NE,NW,SE,SW";
inline const char* const line = "1; -1";
inline const char* const cube8 = "1,0,1; 1,0,-1; -1,0,1; -1,0,-1; 0,1,1; 0,1,-1; 0,-1,1; 0,-1,-1";
inline const char* const cube12 =
    "1,0,1; 1,0,-1; -1,0,1; -1,0,-1; 0,1,1; 0,1,-1; 0,-1,1; 0,-1,-1; 1,1,0; 1,-1,0; -1,1,0; -1,-1,0";

inline walks::StepSet get(const char* text) { return walks::parse_stepset(text); }

}  // namespace models
