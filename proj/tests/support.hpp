#pragma once

#include "tarski/finite_model.hpp"
#include "tarski/kernel.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace tarski::testing {

/// Copy of `d` with step `i` removed (numbered line or qed-frame).
Derivation delete_step(const Derivation& d, std::size_t i);

/// Every single-step deletion of every builtin, labelled "name -step k".
std::vector<std::pair<std::string, Derivation>> deletion_mutants();

/// lemma_re stated over A' with FS taking the place of FS'.
Derivation lemma_re_with_fs();

/// One-line derivation: premise RE, goal B a a a.
Derivation goal_mismatch_one_liner();

/// Random formula over a small variable pool; constants appear when
/// `constants` is set.
Formula random_formula(std::mt19937& rng, int depth, bool constants = true);

/// Random term: a pool variable, or a constant when `constants` is set.
Term random_term(std::mt19937& rng, bool constants);

/// Naive recursive evaluator used as an oracle for the compiled one.
bool naive_eval(const FiniteModel& m, const Formula& f, std::map<std::string, int>& s);

FiniteModel random_finite_model(std::mt19937& rng, int n);

}  // namespace tarski::testing
