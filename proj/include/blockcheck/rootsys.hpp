#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockcheck/rational.hpp"

namespace blockcheck::rootsys {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family;
  int rank;
};

// Validates the (family, rank) pair. Classical families are capped at rank 12;
// admissible ranks are A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2.
LieType make_lie_type(char family_letter, int rank);
LieType make_lie_type(Family family, int rank);

char family_letter(Family f);
std::string to_string(const LieType& t);

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);

// A reduced crystallographic root system in explicit coordinates.
//
// Coordinate models: A_n lives in R^{n+1} with alpha_i = e_i - e_{i+1};
// B_n, C_n, D_n live in R^n with alpha_i = e_i - e_{i+1} for the chain part
// and alpha_n = e_n (B), 2e_n (C), e_{n-1} + e_n (D); E_6/E_7/E_8 and F_4, G_2
// use the standard Bourbaki coordinates. For E_7 the public simple-root order
// is the relabelling under which removing alpha_2 leaves the chain
// alpha_1-alpha_3-alpha_4-alpha_5-alpha_6-alpha_7 with alpha_2 attached to
// alpha_5.
struct RootSystem {
  LieType type;
  std::size_t ambient_dim = 0;
  std::vector<Vec> simple_roots;                // alpha_1 .. alpha_n
  std::vector<Vec> roots;                       // all of Phi, sorted
  std::vector<std::vector<long long>> cartan;   // cartan[i][j] = <a_{i+1}, a_{j+1}^vee>
  std::vector<Vec> fundamental_weights;         // q_1 .. q_n, dual basis to the simple coroots

  int rank() const { return type.rank; }
  bool contains_root(const Vec& v) const;       // membership in `roots`
};

// Builds the full system by closing the simple roots under simple reflections.
// Throws std::invalid_argument on inadmissible types and std::logic_error if
// any internal self-check (root count, length classes) fails.
RootSystem build_root_system(LieType t);

// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha). alpha must be a root of rs;
// beta may be any ambient vector for which the value is an exact integer
// (roots and weights both qualify). Non-integral pairings are rejected.
long long cartan_pairing(const RootSystem& rs, const Vec& beta, const Vec& alpha);

// Simple reflection s_i applied to an ambient vector; i is 1-based.
Vec reflect_simple(const RootSystem& rs, int i, const Vec& v);

}  // namespace blockcheck::rootsys
