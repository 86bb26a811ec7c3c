// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Time budgets are asserted here, in seconds, alongside the content checks.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/corpus.hpp"
#include "core/filters.hpp"
#include "core/poset.hpp"
#include "core/posetprod.hpp"
#include "core/proofs.hpp"
#include "core/suites.hpp"

using namespace gblx;

namespace {

int failed = 0;

void report(int id, const char* title, bool pass, double seconds, const std::string& note) {
  if (!pass) ++failed;
  std::printf("%s criterion %2d  %-28s %6.2fs%s%s\n", pass ? "PASS" : "FAIL", id, title,
              seconds, note.empty() ? "" : "  ", note.c_str());
}

void criterion(int id, const char* title, double budget_s,
               const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body(note);
  } catch (const std::exception& e) {
    note = e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > budget_s) {
    pass = false;
    note += (note.empty() ? "" : "; ") + std::string("over the ") +
            std::to_string((int)budget_s) + "s budget";
  }
  report(id, title, pass, s, note);
}

bool suite_clean(const char* name, std::string& note, long min_checked = 1) {
  suite_report r = run_suite(name, 0);
  std::ostringstream os;
  os << r.checked << " checks";
  if (r.failures != 0) {
    os << ", " << r.failures << " failures";
    if (!r.first_failure.empty()) os << " (first: " << r.first_failure << ")";
    note = os.str();
    return false;
  }
  if (r.checked < min_checked) {
    os << ", below the required " << min_checked;
    note = os.str();
    return false;
  }
  note = os.str();
  return true;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  const corpus& corp = default_corpus();

  criterion(1, "residuated lattice laws", 10.0, [&](std::string& note) {
    int count = 0;
    for (const auto* bucket : {&corp.plain, &corp.boxed, &corp.tense})
      for (const finite_algebra& a : *bucket) {
        ++count;
        rl_report r = check_residuated_lattice(a);
        if (!r.pass) {
          note = a.name + " fails " + r.first->law;
          return false;
        }
      }
    note = std::to_string(count) + " algebras";
    return count > 0;
  });

  criterion(2, "tense identities", 10.0,
            [&](std::string& note) { return suite_clean("lemma-tmv-identities", note); });

  criterion(3, "product repair laws", 60.0,
            [&](std::string& note) { return suite_clean("poset-product-lemma", note); });

  criterion(4, "interior images stay gbl", 10.0,
            [&](std::string& note) { return suite_clean("conucleus-gbl", note); });

  criterion(5, "filter congruence isomorphism", 60.0,
            [&](std::string& note) { return suite_clean("con-fi-iso", note); });

  criterion(6, "congruence extension", 60.0,
            [&](std::string& note) { return suite_clean("cep", note, 50); });

  criterion(7, "deduction witnesses", 120.0,
            [&](std::string& note) { return suite_clean("lddt", note); });

  criterion(8, "box translation", 120.0,
            [&](std::string& note) { return suite_clean("translation-M", note, 1000); });

  criterion(8, "tense translation", 120.0,
            [&](std::string& note) { return suite_clean("translation-T", note, 1000); });

  criterion(9, "derivation corpus and schemes", 30.0, [&](std::string& note) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(GBLX_DATA_DIR) / "derivations";
    int valid = 0, broken = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".json") continue;
      std::string name = entry.path().stem().string();
      derivation_report r = check_derivation(derivation_from_json(slurp(entry.path())));
      if (name.rfind("valid_", 0) == 0) {
        ++valid;
        if (!r.ok) {
          note = name + " rejected: " + r.reason;
          return false;
        }
      } else if (name.rfind("broken_", 0) == 0) {
        ++broken;
        if (r.ok) {
          note = name + " accepted";
          return false;
        }
      }
    }
    if (valid < 5 || broken < 5) {
      note = "corpus too small";
      return false;
    }
    std::string suite_note;
    if (!suite_clean("scheme-soundness", suite_note)) {
      note = suite_note;
      return false;
    }
    note = std::to_string(valid) + " valid + " + std::to_string(broken) +
           " broken files; " + suite_note;
    return true;
  });

  criterion(10, "small frozen examples", 30.0, [&](std::string& note) {
    finite_poset p2 = finite_poset::make("2ch", {"a", "b"}, {{0, 1}});
    labeled_product lp =
        labeled_product::build(p2, {lukasiewicz_chain(2), lukasiewicz_chain(2)});
    std::vector<idx> ac;
    for (idx x = 0; x < lp.prod.size(); ++x)
      if (lp.ac_labeling(x)) ac.push_back(x);
    if (ac.size() != 3) {
      note = "expected 3 antichain labelings, got " + std::to_string(ac.size());
      return false;
    }

    finite_algebra boxed = modal_product(lp, false);
    interior_image img = conucleus_image(boxed, "box");
    if (img.algebra.size() != 3 || img.algebra.mult != img.algebra.meet) {
      note = "image is not the idempotent three-element chain";
      return false;
    }
    class_report c = classify(img.algebra);
    if (!c.is_gbl || c.is_mv) {
      note = "image flags wrong: expected gbl and not mv";
      return false;
    }

    size_t congs = enumerate_congruences(lukasiewicz_chain(3)).size();
    if (congs != 2) {
      note = "expected 2 congruences on the three-chain, got " + std::to_string(congs);
      return false;
    }
    note = "3 labelings; goedel image; 2 congruences";
    return true;
  });

  std::printf("%s: %d criterion(s) failed\n", failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failed);
  return failed == 0 ? 0 : 1;
}
