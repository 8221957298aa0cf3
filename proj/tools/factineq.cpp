// factineq: exact verification of factorial-sum identities and inequalities.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "factineq/catalog.hpp"
#include "factineq/claim_file.hpp"
#include "factineq/errors.hpp"
#include "factineq/harness.hpp"
#include "factineq/report_io.hpp"

namespace {

using namespace factineq;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "json";
  std::string outPath;
  bool timing = false;
  bool verdicts = false;
};

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) {
    throw UsageError("cannot write " + outPath);
  }
  out << text;
}

void emitReports(const std::vector<RangeReport>& reports, const SweepOptions& sweep, bool strict, int code,
                 const OutputOptions& out) {
  if (out.format == "csv") {
    emit(reportsToCsv(reports), out.outPath);
  } else if (out.format == "table") {
    emit(reportsToTable(reports), out.outPath);
  } else {
    RunSummary summary{sweep.nMin, sweep.nMax, strict, code};
    emit(reportsToJson(reports, summary, {out.timing, out.verdicts}), out.outPath);
  }
}

Catalog catalogWith(const std::vector<std::string>& claimFiles) {
  std::vector<BoundClaim> extra;
  for (const auto& path : claimFiles) {
    for (auto& c : loadClaimFile(path).claims()) extra.push_back(std::move(c));
  }
  return extra.empty() ? Catalog::builtin() : Catalog::builtin().withClaims(std::move(extra));
}

// --app app6 selects app6-printed and app6-corrected; --identity I1 selects I1
// and I1/telescope.
std::vector<Subject> selectSubjects(const Catalog& catalog, const std::vector<std::string>& apps,
                                    const std::vector<std::string>& identities) {
  std::vector<Subject> all = listSubjects(catalog);
  if (apps.empty() && identities.empty()) return all;
  std::vector<Subject> out;
  auto pick = [&](const std::string& id, SubjectKind kind) {
    bool found = false;
    for (const auto& s : all) {
      bool match = kind == SubjectKind::Claim
                       ? s.kind == SubjectKind::Claim && (s.id == id || s.id.rfind(id + "-", 0) == 0)
                       : s.kind != SubjectKind::Claim && s.target == id;
      if (match) {
        out.push_back(s);
        found = true;
      }
    }
    if (!found) {
      throw UnknownSubjectError("unknown " + std::string(kind == SubjectKind::Claim ? "claim" : "identity") + " '" +
                                id + "'");
    }
  };
  for (const auto& id : apps) pick(id, SubjectKind::Claim);
  for (const auto& id : identities) pick(id, SubjectKind::Identity);
  std::sort(out.begin(), out.end(), [](const Subject& a, const Subject& b) { return a.id < b.id; });
  out.erase(std::unique(out.begin(), out.end(), [](const Subject& a, const Subject& b) { return a.id == b.id; }),
            out.end());
  return out;
}

void addOutputOptions(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", out.outPath, "Write output to PATH instead of stdout");
  cmd->add_flag("--timing", out.timing, "Include per-subject runtimeMillis in JSON");
  cmd->add_flag("--verdicts", out.verdicts, "Include every per-n verdict in JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of factorial-sum identities and inequalities"};
  app.require_subcommand(1);

  SweepOptions sweep;
  OutputOptions output;
  bool strict = false;
  bool all = false;
  std::vector<std::string> apps;
  std::vector<std::string> identityIds;
  std::vector<std::string> claimFiles;

  auto* verify = app.add_subcommand("verify", "Sweep identities, telescope witnesses and claims");
  auto* allOpt = verify->add_flag("--all", all, "Every registered subject (default)");
  auto* appOpt = verify->add_option("--app", apps, "Claim id, or application prefix such as app6");
  auto* idOpt = verify->add_option("--identity", identityIds, "Identity id (also runs its telescope check)");
  allOpt->excludes(appOpt)->excludes(idOpt);
  verify->add_option("--n-min", sweep.nMin, "First n of the sweep");
  verify->add_option("--n-max", sweep.nMax, "Last n of the sweep");
  verify->add_option("--workers", sweep.workers, "Worker threads (0 = hardware concurrency)");
  verify->add_option("--claims", claimFiles, "Also load user claims from a claim file");
  verify->add_flag("--strict-printed", strict, "Fail on refuted printed variants too");
  addOutputOptions(verify, output);

  std::string subjectId;
  std::int64_t searchMax = kDefaultNMax;
  auto* search = app.add_subcommand("search", "Smallest n at which a subject fails");
  search->add_option("subject-id", subjectId, "Identity, telescope or claim id")->required();
  search->add_option("--n-max", searchMax, "Largest n to scan")->required();
  search->add_option("--claims", claimFiles, "Load user claims from a claim file");
  search->add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string claimPath;
  auto* check = app.add_subcommand("check", "Verify the claims in a claim file");
  check->add_option("file", claimPath, "Claim file (.ineq)")->required();
  check->add_option("--n-min", sweep.nMin, "First n of the sweep");
  check->add_option("--n-max", sweep.nMax, "Last n of the sweep");
  check->add_option("--workers", sweep.workers, "Worker threads (0 = hardware concurrency)");
  addOutputOptions(check, output);

  auto* registry = app.add_subcommand("registry", "Print the built-in sequences, identities and claims");
  registry->add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string claimId;
  std::int64_t tightMax = 20;
  auto* tightness = app.add_subcommand("tightness", "Tightness ratio of a claim for n = 1..N");
  tightness->add_option("claim-id", claimId, "Claim id")->required();
  tightness->add_option("--n-max", tightMax, "Last n");
  tightness->add_option("--claims", claimFiles, "Load user claims from a claim file");
  tightness->add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      validateRange(sweep.nMin, sweep.nMax);
      Catalog catalog = catalogWith(claimFiles);
      auto reports = runSubjects(catalog, selectSubjects(catalog, apps, identityIds), sweep);
      int code = exitCodeFor(reports, strict);
      emitReports(reports, sweep, strict, code, output);
      return code;
    }
    if (check->parsed()) {
      validateRange(sweep.nMin, sweep.nMax);
      ClaimFile file = loadClaimFile(claimPath);
      std::vector<Subject> subjects;
      for (const auto& c : file.claims()) subjects.push_back({c.id, SubjectKind::Claim, c.id});
      Catalog catalog = Catalog::builtin().withClaims(file.claims());
      auto reports = runSubjects(catalog, subjects, sweep);
      int code = exitCodeFor(reports, true);
      emitReports(reports, sweep, false, code, output);
      return code;
    }
    if (search->parsed()) {
      Catalog catalog = catalogWith(claimFiles);
      auto found = searchCounterexample(catalog, subjectId, searchMax);
      if (output.format == "table") {
        if (found) {
          std::cout << subjectId << ": counterexample at n=" << found->n << ": " << found->lhs.toString() << " vs "
                    << found->rhs.toString() << "\n";
        } else {
          std::cout << subjectId << ": no counterexample for n in 1.." << searchMax << "\n";
        }
      } else {
        Json j;
        j["subjectId"] = subjectId;
        j["nMax"] = searchMax;
        if (found) {
          Json c;
          c["n"] = found->n;
          c["lhs"] = toJson(found->lhs);
          c["rhs"] = toJson(found->rhs);
          j["counterexample"] = std::move(c);
        } else {
          j["counterexample"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
      }
      return found ? kExitRefuted : kExitOk;
    }
    if (registry->parsed()) {
      const Catalog& catalog = Catalog::builtin();
      if (output.format == "table") {
        std::cout << registryToTable(catalog);
      } else {
        std::cout << registryToJson(catalog).dump(2) << "\n";
      }
      return kExitOk;
    }
    if (tightness->parsed()) {
      validateRange(1, tightMax);
      Catalog catalog = catalogWith(claimFiles);
      auto samples = tightnessSweep(catalog.claim(claimId), tightMax);
      if (output.format == "table") {
        std::cout << tightnessToTable(claimId, samples);
      } else {
        std::cout << tightnessToJson(claimId, samples).dump(2) << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "factineq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "factineq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClaimFileError& e) {
    std::cerr << "factineq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownSubjectError& e) {
    std::cerr << "factineq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "factineq: " << e.what() << "\n";
    return kExitRefuted;
  }
  return kExitUsage;
}
