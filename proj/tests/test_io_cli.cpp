#include <doctest.h>

#include <sstream>

#include "dgcm/cli.hpp"
#include "dgcm/errors.hpp"
#include "dgcm/io.hpp"
#include "support.hpp"

using namespace dgcm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_text(const std::string& command, const std::string& input, JobSpec job = {}) {
  job.command = command;
  job.input_text = input;
  std::ostringstream out, err;
  const int code = run(job, out, err);
  return {code, out.str(), err.str()};
}

const char* const kA2 = R"({"cartan": [[2,-1],[-1,2]], "height": [0,1]})";
const char* const kA11 = R"({"cartan": [[2,-2],[-2,2]]})";
const char* const kHyp = R"({"cartan": [[2,-6],[-9,2]]})";

}  // namespace

TEST_CASE("input parsing") {
  const InputSpec s = parse_input(R"({
    "cartan": [[2,-1,0],[-1,2,-1],[0,-1,2]],
    "symmetrizer": [1,1,1],
    "orientation": [[2,1],[2,3]],
    "height": [1,0,1],
    "quiver_edges": [[2,1],[2,3]],
    "word_prefix": "2",
    "word_period": "1 3 2"
  })");
  CHECK(s.cartan.size() == 3);
  CHECK(*s.symmetrizer == std::vector<int>{1, 1, 1});
  CHECK(*s.orientation == Orientation{{1, 0}, {1, 2}});
  CHECK(*s.height == HeightFunction{1, 0, 1});
  CHECK(s.quiver_edges->at(0).source == 1);
  CHECK(s.word->prefix == std::vector<int>{1});
  CHECK(s.word->period == std::vector<int>{0, 2, 1});
  const Gcm g = make_gcm(s);
  CHECK(g.orientation() == Orientation{{1, 0}, {1, 2}});
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(parse_input("not json"), ParseError);
  CHECK_THROWS_AS(parse_input("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_input("{}"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": []})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": [[2,-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": [[2.5]]})"), ParseError);
  CHECK_THROWS_WITH_AS(parse_input(R"({"cartan": [[2]], "colour": 1})"), "unknown field 'colour'",
                       ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": [[2]], "orientation": [[1,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": [[2]], "height": [0, 1]})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": [[2]], "word_period": "2"})"), ParseError);
  CHECK_THROWS_AS(parse_input(R"({"cartan": [[2]], "word_period": 1})"), ParseError);
  CHECK_THROWS_AS(read_input_file("/nonexistent/input.json"), ParseError);
  // Well-formed JSON describing an invalid matrix is a precondition failure.
  CHECK_THROWS_AS(make_gcm(parse_input(R"({"cartan": [[2,0],[0,2]]})")), PreconditionError);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("1 2  1") == std::vector<int>{0, 1, 0});
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("1 x"), ParseError);
  CHECK_THROWS_AS(parse_word("0"), ParseError);
  CHECK_THROWS_AS(parse_word("1.5"), ParseError);
}

TEST_CASE("series rendering and records") {
  CHECK(render_series(TruncatedSeries(testing::qt(-1, 1), 3)) == "q^-1 t + O(t^4)");
  CHECK(render_series(TruncatedSeries(Poly(), 2)) == "O(t^3)");
  PolyMatrix m(1, 2);
  m(0, 1) = testing::qt(1, -1) - Poly(3);
  std::ostringstream os;
  write_records(os, m);
  CHECK(os.str() == "1\t2\tq t^-1\t1\n1\t2\t1\t-3\n");
}

TEST_CASE("validate reports the symmetrizer and type") {
  const Run r = run_text("validate", kHyp);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("symmetrizer: diag(3,2)\n") != std::string::npos);
  CHECK(r.out.find("type: infinite\n") != std::string::npos);
  CHECK(r.out.find("condf: false\n") != std::string::npos);
}

TEST_CASE("deform prints the A1^(1) matrix") {
  const Run r = run_text("deform", kA11);
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "C(1,1) = q t^-1 + q^-1 t\n"
        "C(1,2) = -u[1,2,1] - u[1,2,2]\n"
        "C(2,1) = -u[1,2,1]^-1 - u[1,2,2]^-1\n"
        "C(2,2) = q t^-1 + q^-1 t\n");
  JobSpec job;
  job.mu_one = true;
  CHECK(run_text("deform", kA11, job).out.find("C(1,2) = -2\n") != std::string::npos);
}

TEST_CASE("invert with every method") {
  JobSpec job;
  job.trunc = 10;
  job.method = "all";
  const Run r = run_text("invert", kA2, job);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("methods agree\n") != std::string::npos);
  CHECK(r.out.find("Cinv(1,1) = q^-1 t - q^-5 t^5 + q^-7 t^7 + O(t^11)\n") != std::string::npos);
  // Deterministic output.
  CHECK(run_text("invert", kA2, job).out == r.out);

  job.output = OutputMode::records;
  const Run rec = run_text("invert", kA2, job);
  CHECK(rec.out.find("1\t1\tq^-1 t\t1\n") != std::string::npos);
  CHECK(rec.out.find("methods") == std::string::npos);
}

TEST_CASE("invert method preconditions") {
  JobSpec job;
  job.method = "bipartite";
  CHECK(run_text("invert", kA11, job).code == kExitPrecondition);
  job.method = "word";
  CHECK(run_text("invert", kA11, job).code == kExitPrecondition);
  job.word = PeriodicWord{{}, {0, 1}};
  CHECK(run_text("invert", kA11, job).code == kExitOk);
  job.method = "newton";
  CHECK(run_text("invert", kA11, job).code == kExitPrecondition);
  job.method = "series";
  job.trunc = 0;
  CHECK(run_text("invert", kA11, job).code == kExitPrecondition);
  job.trunc = 4;
  job.word = PeriodicWord{{}, {0, 0, 1}};
  job.method = "word";
  const Run bad = run_text("invert", kA11, job);
  CHECK(bad.code == kExitPrecondition);
  CHECK(bad.err.find("not reduced") != std::string::npos);
}

TEST_CASE("exit codes by error class") {
  CHECK(run_text("validate", "{").code == kExitParse);
  CHECK(run_text("frobnicate", kA2).code == kExitParse);
  CHECK(run_text("validate", R"({"cartan": [[2,-1],[0,2]]})").code == kExitPrecondition);
  CHECK(run_text("longest", kA11).code == kExitPrecondition);
  CHECK(run_text("ext-dim", kA2).code == kExitPrecondition);
  JobSpec job;
  job.input_path = "/nonexistent.json";
  job.command = "validate";
  std::ostringstream out, err;
  CHECK(run(job, out, err) == kExitParse);
}

TEST_CASE("other subcommands") {
  const Run longest = run_text("longest", R"({"cartan": [[2,-1],[-2,2]]})");
  CHECK(longest.code == kExitOk);
  CHECK(longest.out.find("T_w0 = -q^-6 t^4 nu\n") != std::string::npos);

  const Run braid = run_text("braid-check", kHyp);
  CHECK(braid.code == kExitOk);
  CHECK(braid.out == "(1,2): no relation required (c_ij c_ji = 54)\n");

  const Run kp = run_text("kp", kHyp);
  CHECK(kp.code == kExitOk);
  CHECK(kp.out.find("equal: false\n") != std::string::npos);

  JobSpec job;
  job.i = 0;
  job.j = 0;
  job.ell = 1;
  const Run ep = run_text("ep", R"({"cartan": [[2]]})", job);
  CHECK(ep.code == kExitOk);
  CHECK(ep.out.find("denominators: (1 - q^-4 t^4)[t]\n") != std::string::npos);
  CHECK(ep.out.find("(1 - q^2)[q]") != std::string::npos);

  job.k = 1;
  job.l = 0;
  const Run ext = run_text("ext-dim", kA2, job);
  CHECK(ext.code == kExitOk);
  CHECK(ext.out == "1\n");
  job.i = 7;
  CHECK(run_text("ext-dim", kA2, job).code == kExitPrecondition);
}
