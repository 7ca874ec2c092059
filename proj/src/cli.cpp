#include "dgcm/cli.hpp"

#include <ostream>
#include <sstream>

#include "dgcm/cartan.hpp"
#include "dgcm/ep_pairing.hpp"
#include "dgcm/errors.hpp"
#include "dgcm/io.hpp"
#include "dgcm/kp.hpp"
#include "dgcm/weyl.hpp"

namespace dgcm {

namespace {

// Cross-method disagreement or a failed identity; reported with exit code 4.
class Disagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

template <typename T>
std::string list_str(const std::vector<T>& v, int offset = 0) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k] + offset;
  return os.str();
}

PolyMatrix maybe_mu_one(PolyMatrix m, bool mu_one) {
  if (!mu_one) return m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = specialize(m(i, j), Specialization::mu_one());
  }
  return m;
}

Matrix<TruncatedSeries> maybe_mu_one(Matrix<TruncatedSeries> m, bool mu_one) {
  if (!mu_one) return m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = specialize(m(i, j), Specialization::mu_one());
  }
  return m;
}

void print_matrix(std::ostream& out, const std::string& name, const PolyMatrix& m, OutputMode mode) {
  if (mode == OutputMode::records) {
    write_records(out, m);
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << name << pair_str(static_cast<int>(i), static_cast<int>(j)) << " = " << m(i, j).str()
          << '\n';
    }
  }
}

void print_series(std::ostream& out, const Matrix<TruncatedSeries>& m, OutputMode mode) {
  if (mode == OutputMode::records) {
    write_records(out, m);
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << "Cinv" << pair_str(static_cast<int>(i), static_cast<int>(j)) << " = "
          << render_series(m(i, j)) << '\n';
    }
  }
}

int cmd_validate(const Gcm& g, std::ostream& out) {
  out << "size: " << g.size() << '\n';
  out << "symmetrizer: diag(" << list_str(g.symmetrizer()) << ")\n";
  out << "r: " << g.r() << '\n';
  out << "type: " << (g.is_finite() ? "finite" : "infinite") << '\n';
  out << "symmetric: " << (g.is_symmetric() ? "true" : "false") << '\n';
  out << "condf: " << (g.condf() ? "true" : "false") << '\n';
  out << "orientation:";
  for (auto [i, j] : g.orientation()) out << ' ' << pair_str(i, j);
  out << '\n';
  for (auto [i, j] : g.orientation()) {
    out << "edge " << pair_str(i, j) << ": g=" << g.g(i, j) << " f_ij=" << g.f(i, j)
        << " f_ji=" << g.f(j, i) << " d_ij=" << g.d_pair(i, j) << '\n';
  }
  return kExitOk;
}

struct Applicable {
  InverseMethod method;
  InverseResult result;
};

PeriodicWord default_word(const Gcm& g) { return {{}, topological_order(g)}; }

int cmd_invert(const JobSpec& job, const InputSpec& spec, const Gcm& g, std::ostream& out) {
  const int n = g.size();
  auto height = spec.height ? spec.height : find_height_function(g);
  auto word = job.word ? job.word : spec.word;

  auto run_one = [&](const std::string& m) -> InverseResult {
    if (m == "series") return invert_series(g, job.trunc);
    if (m == "coxeter") return invert_coxeter(g, job.trunc);
    if (m == "bipartite") {
      if (!spec.height) throw PreconditionError("method bipartite requires a height function in the input");
      return invert_bipartite(g, *spec.height, job.trunc);
    }
    if (m == "word") {
      if (!word) throw PreconditionError("method word requires a word description");
      return invert_word(g, *word, job.trunc);
    }
    throw PreconditionError("unknown method '" + m + "'");
  };

  if (job.method != "all") {
    InverseResult r = run_one(job.method);
    if (job.output == OutputMode::text) {
      out << "method: " << to_string(r.method) << '\n' << "trunc: " << r.trunc << '\n';
      if (r.unverified) out << "note: unverified-condition (finite-type word not checked)\n";
    }
    print_series(out, maybe_mu_one(r.entries, job.mu_one), job.output);
    return kExitOk;
  }

  std::vector<InverseResult> results;
  results.push_back(invert_series(g, job.trunc));
  results.push_back(invert_coxeter(g, job.trunc));
  if (height) results.push_back(invert_bipartite(g, *height, job.trunc));
  results.push_back(invert_word(g, word ? *word : default_word(g), job.trunc));

  std::vector<std::string> mismatches;
  for (std::size_t m = 1; m < results.size(); ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!(results[m].entries(i, j) == results[0].entries(i, j))) {
          mismatches.push_back(to_string(results[m].method) + " vs series at " + pair_str(i, j));
        }
      }
    }
  }
  if (job.output == OutputMode::text) {
    out << "methods:";
    for (const auto& r : results) out << ' ' << to_string(r.method);
    out << '\n' << "trunc: " << job.trunc << '\n';
    if (mismatches.empty()) {
      out << "methods agree\n";
    } else {
      for (const auto& s : mismatches) out << "DISAGREE " << s << '\n';
    }
  }
  print_series(out, maybe_mu_one(results[0].entries, job.mu_one), job.output);
  if (!mismatches.empty()) throw Disagreement("inversion methods disagree");
  return kExitOk;
}

int cmd_braid_check(const Gcm& g, std::ostream& out) {
  bool ok = true;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      BraidCheck check = check_braid_relations(g, i, j);
      out << pair_str(i, j) << ": " << check.relation;
      if (check.required) out << (check.holds ? " holds" : " FAILS");
      out << '\n';
      ok = ok && check.holds;
    }
  }
  if (!ok) throw Disagreement("braid relation failed");
  return kExitOk;
}

int cmd_longest(const Gcm& g, std::ostream& out) {
  const LongestElement w0 = longest_and_star(g);
  const CoxeterData cox = coxeter_data(g);
  const LongestMonomial lm = extract_longest_monomial(g);
  out << "w0: " << list_str(w0.word.letters(), 1) << '\n';
  out << "length: " << w0.word.length() << '\n';
  out << "star: " << list_str(w0.star, 1) << '\n';
  out << "h: " << cox.h << '\n';
  out << "h_dual: " << cox.h_dual << '\n';
  out << "r: " << g.r() << '\n';
  out << "T_w0 = -q^" << -lm.rh_dual << " t^" << lm.h << " nu\n";
  for (int i = 0; i < g.size(); ++i) {
    out << "nu(alpha_" << i + 1 << ") = " << lm.nu_mu[i].str() << " alpha_" << lm.nu_perm[i] + 1
        << '\n';
  }
  if (lm.rh_dual != g.r() * cox.h_dual || lm.h != cox.h) {
    throw Disagreement("T_w0 monomial disagrees with (r h_dual, h) from the root system");
  }
  return kExitOk;
}

int cmd_kp(const InputSpec& spec, const Gcm& g, std::ostream& out, OutputMode mode) {
  const auto edges = spec.quiver_edges ? *spec.quiver_edges : default_quiver(g);
  const auto kp = kp_matrix(g, edges);
  const KpReport report = kp_compare(g, edges);
  out << "condf: " << (report.condf ? "true" : "false") << '\n';
  out << "equal: " << (report.equal ? "true" : "false") << '\n';
  if (mode == OutputMode::text) {
    for (std::size_t i = 0; i < kp.rows(); ++i) {
      for (std::size_t j = 0; j < kp.cols(); ++j) {
        out << "CKP" << pair_str(static_cast<int>(i), static_cast<int>(j)) << " = "
            << kp(i, j).str() << '\n';
      }
    }
  }
  print_matrix(out, "transformed", report.transformed, mode);
  print_matrix(out, "reference", report.reference, mode);
  if (report.equal != report.condf) throw Disagreement("KP comparison contradicts condf");
  return kExitOk;
}

void print_closed_form(std::ostream& out, const ClosedForm& f) {
  out << "  numerator: " << f.numerator.str() << '\n';
  out << "  denominators:";
  if (f.denominators.empty()) out << " none";
  for (const auto& d : f.denominators) {
    out << " (1 - " << d.gamma.str() << ")[" << to_string(d.direction) << ']';
  }
  out << '\n';
}

int cmd_ep(const JobSpec& job, const Gcm& g, std::ostream& out) {
  for (int i = 0; i < g.size(); ++i) {
    if (job.i && *job.i != i) continue;
    for (int j = 0; j < g.size(); ++j) {
      if (job.j && *job.j != j) continue;
      out << "<E_" << i + 1 << ",S_" << j + 1 << ">:\n";
      print_closed_form(out, ep_E_S(g, i, j));
      if (job.ell) {
        out << "<S_" << i + 1 << ",S_" << j + 1 << "> (ell=" << *job.ell << "):\n";
        print_closed_form(out, ep_S_S(g, i, j, *job.ell));
      }
    }
  }
  return kExitOk;
}

int cmd_ext_dim(const JobSpec& job, const InputSpec& spec, const Gcm& g, std::ostream& out) {
  if (!job.i || !job.j || !job.k || !job.l) {
    throw PreconditionError("ext-dim needs --i, --k, --j and --l");
  }
  auto height = spec.height ? spec.height : find_height_function(g);
  if (!height) throw PreconditionError("not a height function (matrix is not bipartite)");
  out << ext_dim(g, *height, *job.i, *job.k, *job.j, *job.l, job.trunc) << '\n';
  return kExitOk;
}

int dispatch(const JobSpec& job, std::ostream& out) {
  if (job.trunc < 1) throw PreconditionError("truncation must be at least 1");
  const InputSpec spec = job.input_text ? parse_input(*job.input_text) : read_input_file(job.input_path);
  const Gcm g = make_gcm(spec);
  for (auto idx : {job.i, job.j}) {
    if (idx && (*idx < 0 || *idx >= g.size())) throw PreconditionError("vertex index out of range");
  }
  if (job.command == "validate") return cmd_validate(g, out);
  if (job.command == "deform") {
    print_matrix(out, "C", maybe_mu_one(deformed_cartan(g).entries, job.mu_one), job.output);
    return kExitOk;
  }
  if (job.command == "invert") return cmd_invert(job, spec, g, out);
  if (job.command == "braid-check") return cmd_braid_check(g, out);
  if (job.command == "longest") return cmd_longest(g, out);
  if (job.command == "kp") return cmd_kp(spec, g, out, job.output);
  if (job.command == "ep") return cmd_ep(job, g, out);
  if (job.command == "ext-dim") return cmd_ext_dim(job, spec, g, out);
  throw ParseError("unknown command '" + job.command + "'");
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(job, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Disagreement& e) {
    err << "disagreement: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace dgcm
