#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "filiform/forms.hpp"
#include "filiform/spectral.hpp"

namespace filiform {

enum class SymplecticReason { None, GrCNotM0, GrLNotSymplectic, SpectralObstruction, GenericSearchExhausted };
const char* reason_name(SymplecticReason r);

struct SymplecticCertificate {
  bool exists = false;
  Form<Q> form{2};
  Form<Q> top_power{0};
  SymplecticReason reason = SymplecticReason::None;
  std::string path;  // structured or generic
  std::string detail;
  SearchCertificate search;              // generic path
  std::optional<SurvivalResult> survival;
  std::optional<bool> generic_agrees;    // cross-check of a structured verdict
};

bool is_symplectic_form(const LieAlgebra<Q>& g, const Form<Q>& phi);

// Structured path on filiform input, generic search otherwise (and as a cross-check).
SymplecticCertificate symplectic_exists(const LieAlgebra<Q>& g, bool cross_check = true);
SymplecticCertificate symplectic_exists_generic(const LieAlgebra<Q>& g);

std::map<int, Form<Q>> homogeneous_decomposition(const GradedLieAlgebra<Q>& a, const Form<Q>& phi);

struct ContactCertificate {
  Form<Q> form{1};
  Form<Q> volume{0};
  bool valid = false;
};

ContactCertificate contact_check(const LieAlgebra<Q>& g, const Form<Q>& beta);

struct Contactization {
  LieAlgebra<Q> algebra;
  Form<Q> beta{1};
  ContactCertificate certificate;
};

// central extension by omega with beta dual to the new central vector
Contactization contactize(const LieAlgebra<Q>& g, const Form<Q>& omega);

struct ContactSearch {
  bool exists = false;
  std::optional<ContactCertificate> certificate;
  SearchCertificate search;
};

ContactSearch contact_search(const LieAlgebra<Q>& g);

struct CatalogCheckEntry {
  std::string name;
  std::string params;
  bool expected = false;
  bool got = false;
  std::string note;
  bool ok() const { return expected == got; }
};

struct CatalogCheckReport {
  std::vector<CatalogCheckEntry> entries;
  std::vector<std::string> notes;
  bool ok() const;
};

CatalogCheckReport symplectic_catalog_check();

}  // namespace filiform
