#pragma once

#include <json.hpp>

#include "liekms/catalog.hpp"
#include "liekms/essential.hpp"
#include "liekms/thermal.hpp"

namespace liekms {

/// Report serializers for the CLI. Canonical on purpose: keys sorted
/// (nlohmann's default object is ordered by key), rationals as strings,
/// no floats anywhere in the exact pipelines.

inline nlohmann::json spectrum_to_json(const AdSpectrum& s) {
  nlohmann::json eigenvalues = nlohmann::json::array();
  for (const auto& ev : s.rational_eigenvalues) {
    nlohmann::json e;
    e["eigenvalue"] = ev.value.str();
    e["alg_mult"] = ev.alg_mult;
    e["geo_mult"] = ev.geo_mult;
    eigenvalues.push_back(e);
  }
  return eigenvalues;
}

inline nlohmann::json essentiality_to_json(const EssentialityReport& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["diagonalizable"] = r.diagonalizable.is_yes();
  j["eigenvalues"] = spectrum_to_json(r.spectrum);
  j["gstar_dim"] = r.gstar.dim();
  j["span_sum_dim"] = r.span_sum_dim;
  j["crosscheck_dim"] = r.criterion_a_dim ? nlohmann::json(*r.criterion_a_dim) : nlohmann::json(nullptr);
  j["failure_reason"] = r.failure_reason ? nlohmann::json(*r.failure_reason) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json temperature_to_json(const TemperatureReport& r) {
  nlohmann::json j;
  if (r.beta) {
    nlohmann::json b;
    b["two_pi_over"] = r.beta->two_pi_over.str();
    j["beta"] = b;
  } else {
    j["beta"] = nullptr;
  }
  nlohmann::json moduli = nlohmann::json::array();
  for (const auto& m : r.moduli) moduli.push_back(m.str());
  j["moduli"] = moduli;
  j["uniform"] = r.uniform;
  j["notes"] = r.notes;
  return j;
}

inline nlohmann::json triple_to_json(const Sl2Triple& t) {
  nlohmann::json j;
  j["lambda"] = t.lambda.str();
  j["m"] = t.m.expression();
  j["n_plus"] = t.n_plus.expression();
  j["n_minus"] = t.n_minus.expression();
  j["rotation"] = t.rotation.expression();
  j["scale_note"] = t.scale_note;
  return j;
}

inline nlohmann::json rotation_check_to_json(const RotationCheck& c) {
  nlohmann::json j;
  j["ad_spectrum_imaginary"] = c.ad_spectrum_imaginary;
  j["rep_periodic"] = c.rep_periodic ? nlohmann::json(*c.rep_periodic) : nlohmann::json(nullptr);
  j["period_residual"] = c.period_residual ? nlohmann::json(*c.period_residual) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json killing_to_json(const KillingReport& r) {
  nlohmann::json j;
  nlohmann::json sig;
  sig["n_pos"] = r.n_pos;
  sig["n_neg"] = r.n_neg;
  sig["n_zero"] = r.n_zero;
  j["signature"] = sig;
  j["negative_definite"] = r.negative_definite;
  j["nondegenerate"] = r.nondegenerate;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < r.matrix.cols(); ++k) row.push_back(r.matrix(i, k).str());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

inline nlohmann::json closure_to_json(const InvarianceClosure& c) {
  nlohmann::json j;
  j["dim"] = c.subspace.dim();
  j["is_full"] = c.is_full;
  j["irrational_skipped"] = c.irrational_skipped;
  nlohmann::json basis = nlohmann::json::array();
  for (const Element& e : c.subspace.basis_elements()) basis.push_back(e.expression());
  j["basis"] = basis;
  return j;
}

inline nlohmann::json catalog_entry_to_json(const CatalogEntry& e) {
  nlohmann::json j;
  j["name"] = e.algebra->name();
  j["dim"] = e.algebra->dim();
  j["basis"] = e.algebra->basis_labels();
  nlohmann::json golden = nlohmann::json::array();
  for (const auto& [element, expected] : e.known_essential) {
    nlohmann::json g;
    g["element"] = element.expression();
    g["essential"] = expected;
    golden.push_back(g);
  }
  j["known_essential"] = golden;
  j["no_essential_elements"] = e.no_essential_elements;
  j["has_defining_rep"] = e.defining_rep.has_value();
  j["notes"] = e.notes;
  return j;
}

}  // namespace liekms
