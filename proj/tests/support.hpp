#pragma once

#include <string>
#include <vector>

#include "factor/factor_theory.hpp"
#include "factor/graph.hpp"

namespace factor::testing {

// Bundled graph6 corpus (all connected graphs up to isomorphism).
std::vector<std::string> corpus_lines(int max_order);
std::vector<Graph> corpus_graphs(int max_order);

// Unpruned oracle: evaluates 2*i(G-S) - (2k+1)|S| over every subset,
// keeping the numerically smallest maximizer. Usable up to ~16 vertices.
DeficiencyReport brute_deficiency(const Graph& g, int k);

// Independence number by plain subset enumeration.
int brute_alpha(const Graph& g);

// Closed-form Laplacian spectra, sorted descending.
std::vector<double> complete_spectrum(int n);
std::vector<double> cycle_spectrum(int n);
std::vector<double> path_spectrum(int n);
std::vector<double> star_spectrum(int n);

// Structural recognizer for the k-family, independent of the catalog
// construction: strips leaves, classifies the rest into odd-degree core
// vertices and degree-2 connectors, and checks the leaf top-up counts.
bool looks_like_family_member(const Graph& tree, int k);

// True when the two graphs have identical order and edge sets.
bool identical(const Graph& a, const Graph& b);

}  // namespace factor::testing
