#include "factineq/report_io.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace factineq {

Json toJson(const BigRational& value) {
  Json j;
  j["num"] = value.num().get_str();
  j["den"] = value.den().get_str();
  j["dec"] = toDecimal(value);
  return j;
}

Json toJson(const Verdict& v) {
  Json j;
  j["n"] = v.n;
  j["lhs"] = toJson(v.lhs);
  j["rhs"] = toJson(v.rhs);
  j["holds"] = v.holds;
  j["equality"] = v.equality;
  j["tightness"] = v.tightness ? toJson(*v.tightness) : Json(nullptr);
  return j;
}

Json toJson(const DerivationCheck& check) {
  Json j;
  j["kind"] = check.kind;
  Json inputs = Json::object();
  for (const auto& [key, value] : check.inputs) inputs[key] = value;
  j["inputs"] = std::move(inputs);
  j["checkedUpTo"] = check.checkedUpTo;
  j["reproducesRhs"] = check.reproducesRhs;
  j["firstMismatchN"] = check.firstMismatchN ? Json(*check.firstMismatchN) : Json(nullptr);
  j["inputError"] = check.inputError ? Json(*check.inputError) : Json(nullptr);
  j["failedPremises"] = check.failedPremises;
  j["notes"] = check.notes;
  return j;
}

Json toJson(const RangeReport& r, const JsonOptions& options) {
  Json j;
  j["subjectId"] = r.subjectId;
  j["subjectKind"] = std::string(toString(r.subjectKind));
  j["variant"] = r.variant;
  j["statement"] = r.statement;
  j["status"] = r.status();
  j["nMin"] = r.nMin;
  j["nMax"] = r.nMax;
  j["allHold"] = r.allHold;
  Json counter = Json::array();
  for (const auto& c : r.counterexamples) {
    Json cj;
    cj["n"] = c.n;
    cj["lhs"] = toJson(c.lhs);
    cj["rhs"] = toJson(c.rhs);
    counter.push_back(std::move(cj));
  }
  j["counterexamples"] = std::move(counter);
  j["equalityPoints"] = r.equalityPoints;
  if (r.minTightness) {
    Json t;
    t["n"] = r.minTightness->n;
    t["ratio"] = toJson(r.minTightness->ratio);
    j["minTightness"] = std::move(t);
  } else {
    j["minTightness"] = nullptr;
  }
  j["correctedSibling"] = r.correctedSibling ? Json(*r.correctedSibling) : Json(nullptr);
  j["derivation"] = r.derivation ? toJson(*r.derivation) : Json(nullptr);
  j["error"] = r.error ? Json(*r.error) : Json(nullptr);
  if (options.includeTiming) {
    j["runtimeMillis"] = r.runtimeMillis;
  }
  if (options.includeVerdicts) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(toJson(v));
    j["verdicts"] = std::move(verdicts);
  }
  return j;
}

std::string reportsToJson(const std::vector<RangeReport>& reports, const RunSummary& summary,
                          const JsonOptions& options) {
  std::map<std::string, int> counts{{"holds", 0}, {"refuted", 0}, {"refuted-as-printed", 0}, {"error", 0}};
  Json list = Json::array();
  for (const auto& r : reports) {
    ++counts[r.status()];
    list.push_back(toJson(r, options));
  }
  Json doc;
  doc["tool"] = "factineq";
  doc["nMin"] = summary.nMin;
  doc["nMax"] = summary.nMax;
  doc["strictPrinted"] = summary.strictPrinted;
  doc["exitCode"] = summary.exitCode;
  Json s;
  s["subjects"] = reports.size();
  s["holds"] = counts["holds"];
  s["refuted"] = counts["refuted"];
  s["refutedAsPrinted"] = counts["refuted-as-printed"];
  s["errors"] = counts["error"];
  doc["summary"] = std::move(s);
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

namespace {

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reportsToCsv(const std::vector<RangeReport>& reports) {
  std::ostringstream out;
  out << "subject_id,subject_kind,variant,n,holds,equality,lhs_num,lhs_den,rhs_num,rhs_den,"
         "tightness_num,tightness_den,tightness_dec,error\n";
  for (const auto& r : reports) {
    std::string prefix = csvField(r.subjectId) + "," + std::string(toString(r.subjectKind)) + "," + r.variant + ",";
    if (r.error) {
      out << prefix << ",error,,,,,,,,," << csvField(*r.error) << "\n";
      continue;
    }
    for (const auto& v : r.verdicts) {
      out << prefix << v.n << "," << (v.holds ? "true" : "false") << "," << (v.equality ? "true" : "false") << ","
          << v.lhs.num().get_str() << "," << v.lhs.den().get_str() << "," << v.rhs.num().get_str() << ","
          << v.rhs.den().get_str() << ",";
      if (v.tightness) {
        out << v.tightness->num().get_str() << "," << v.tightness->den().get_str() << ","
            << toDecimal(*v.tightness);
      } else {
        out << ",,";
      }
      out << ",\n";
    }
  }
  return out.str();
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string joinPoints(const std::vector<std::int64_t>& points) {
  if (points.empty()) return "-";
  std::string out;
  std::size_t shown = 0;
  for (auto p : points) {
    if (shown == 5) {
      out += ",...";
      break;
    }
    out += (shown ? "," : "") + std::to_string(p);
    ++shown;
  }
  return out;
}

std::string shortValue(const BigRational& v) {
  std::string exact = v.toString();
  return exact.size() <= 24 ? exact : "~" + toDecimal(v);
}

}  // namespace

std::string reportsToTable(const std::vector<RangeReport>& reports) {
  std::ostringstream out;
  out << pad("SUBJECT", 20) << pad("KIND", 11) << pad("VARIANT", 10) << pad("STATUS", 20) << pad("EQUALITY", 14)
      << pad("MIN TIGHTNESS", 28) << "FIRST COUNTEREXAMPLE\n";
  for (const auto& r : reports) {
    out << pad(r.subjectId, 20) << pad(std::string(toString(r.subjectKind)), 11) << pad(r.variant, 10)
        << pad(r.status(), 20) << pad(joinPoints(r.equalityPoints), 14);
    if (r.minTightness) {
      out << pad("~" + toDecimal(r.minTightness->ratio) + " @" + std::to_string(r.minTightness->n), 28);
    } else {
      out << pad("-", 28);
    }
    if (r.error) {
      out << "error: " << *r.error;
    } else if (!r.counterexamples.empty()) {
      const auto& c = r.counterexamples.front();
      out << "n=" << c.n << ": " << shortValue(c.lhs) << " vs " << shortValue(c.rhs) << " ("
          << r.counterexamples.size() << " total)";
    } else {
      out << "-";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

Json derivationJson(const Derivation& d) {
  Json j;
  if (const auto* c = std::get_if<ChebyshevDerivation>(&d)) {
    j["kind"] = "chebyshev";
    j["x"] = c->xId;
    j["y"] = c->yId;
    j["xyIdentity"] = c->xyIdentityId;
    j["xPowerSum"] = c->xPowerSumId;
    j["alignment"] = std::string(toString(c->alignment));
    if (c->reindex) {
      Json r;
      r["shift"] = c->reindex->shift;
      r["head"] = c->reindex->headSource;
      r["note"] = c->reindex->note;
      j["reindex"] = std::move(r);
    }
  } else {
    const auto& chain = std::get<ReciprocalChain>(d);
    j["kind"] = "reciprocal-chain";
    j["base"] = chain.baseClaimId;
    j["a"] = chain.sequenceId;
  }
  return j;
}

}  // namespace

Json registryToJson(const Catalog& catalog) {
  Json doc;
  Json seqs = Json::array();
  for (const auto& s : catalog.sequences()) {
    Json j;
    j["id"] = s.id;
    j["term"] = s.source;
    j["description"] = s.description;
    seqs.push_back(std::move(j));
  }
  Json ids = Json::array();
  for (const auto& i : catalog.identities()) {
    Json j;
    j["id"] = i.id;
    j["summand"] = i.summand.source;
    j["closedForm"] = i.closedFormSource;
    if (i.witness) {
      Json w;
      w["c"] = i.witness->cSource;
      w["g"] = i.witness->gSource;
      w["text"] = "summand(k) = " + i.witness->cSource + " + g(k+1) - g(k), g(k) = " + i.witness->gSource;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    j["provenance"] = std::string(toString(i.provenance));
    j["correctedSibling"] = i.correctedSibling ? Json(*i.correctedSibling) : Json(nullptr);
    j["note"] = i.note;
    ids.push_back(std::move(j));
  }
  Json claims = Json::array();
  for (const auto& c : catalog.claims()) {
    Json j;
    j["id"] = c.id;
    j["summand"] = c.summand.source;
    j["relation"] = std::string(toString(c.relation));
    j["rhs"] = c.rhsSource;
    j["variant"] = std::string(toString(c.variant));
    j["correctedSibling"] = c.correctedSibling ? Json(*c.correctedSibling) : Json(nullptr);
    j["derivation"] = c.derivation ? derivationJson(*c.derivation) : Json(nullptr);
    j["note"] = c.note;
    claims.push_back(std::move(j));
  }
  doc["sequences"] = std::move(seqs);
  doc["identities"] = std::move(ids);
  doc["claims"] = std::move(claims);
  return doc;
}

std::string registryToTable(const Catalog& catalog) {
  std::ostringstream out;
  out << "SEQUENCES\n";
  for (const auto& s : catalog.sequences()) {
    out << "  " << pad(s.id, 18) << s.source << "\n";
  }
  out << "IDENTITIES\n";
  for (const auto& i : catalog.identities()) {
    out << "  " << pad(i.id, 6) << pad(std::string(toString(i.provenance)), 11) << i.statement();
    if (i.witness) out << "   [g(k) = " << i.witness->gSource << ", c = " << i.witness->cSource << "]";
    out << "\n";
  }
  out << "CLAIMS\n";
  for (const auto& c : catalog.claims()) {
    out << "  " << pad(c.id, 16) << pad(std::string(toString(c.variant)), 11) << c.statement() << "\n";
  }
  return out.str();
}

std::string tightnessToTable(const std::string& claimId, const std::vector<TightnessSample>& samples) {
  std::ostringstream out;
  out << "tightness of " << claimId << " (1 = tight; decimals approximate)\n";
  out << pad("n", 8) << pad("ratio (approx.)", 22) << "holds\n";
  for (const auto& s : samples) {
    out << pad(std::to_string(s.n), 8) << pad(s.decimal, 22) << (s.holds ? "yes" : "NO") << "\n";
  }
  return out.str();
}

Json tightnessToJson(const std::string& claimId, const std::vector<TightnessSample>& samples) {
  Json doc;
  doc["claim"] = claimId;
  Json rows = Json::array();
  for (const auto& s : samples) {
    Json j;
    j["n"] = s.n;
    j["ratio"] = s.ratio ? toJson(*s.ratio) : Json(nullptr);
    j["decimal"] = s.decimal;
    j["holds"] = s.holds;
    rows.push_back(std::move(j));
  }
  doc["samples"] = std::move(rows);
  return doc;
}

}  // namespace factineq
