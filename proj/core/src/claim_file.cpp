#include "factineq/claim_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace factineq {

namespace {

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class LineParser {
 public:
  LineParser(std::string_view line, const std::string& path, std::size_t lineNo)
      : line_(line), path_(path), lineNo_(lineNo) {}

  ClaimEntry parse() {
    ClaimEntry entry;
    entry.line = lineNo_;
    skipSpace();
    expectWord("claim");

    skipSpace();
    std::size_t nameStart = pos_;
    if (pos_ >= line_.size() || !(std::isalpha(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
      fail("expected claim name");
    }
    while (pos_ < line_.size() && isNameChar(line_[pos_])) ++pos_;
    entry.name = std::string(line_.substr(nameStart, pos_ - nameStart));
    nameOffset_ = nameStart;

    skipSpace();
    if (pos_ >= line_.size() || line_[pos_] != ':') fail("expected ':' after claim name");
    ++pos_;
    if (line_.find("<=", pos_) == std::string_view::npos && line_.find(">=", pos_) == std::string_view::npos) {
      pos_ = line_.size();
      fail("missing relation token, expected '<=' or '>='");
    }
    skipSpace();
    expectWord("sum");

    std::size_t le = line_.find("<=", pos_);
    std::size_t ge = line_.find(">=", pos_);
    std::size_t rel = std::min(le, ge);
    std::size_t other = (rel == le) ? ge : le;
    std::size_t again = std::min(other, line_.find(rel == le ? "<=" : ">=", rel + 2));
    if (again != std::string_view::npos) {
      pos_ = again;
      fail("more than one relation token");
    }
    entry.relation = rel == le ? Relation::AtMost : Relation::AtLeast;
    entry.summand = checkedExpr(pos_, rel, Variable::K, "summand");
    entry.bound = checkedExpr(rel + 2, line_.size(), Variable::N, "bound");
    return entry;
  }

  std::size_t nameOffset() const { return nameOffset_; }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ClaimFileError(path_, lineNo_, pos_, message); }

  void skipSpace() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  void expectWord(std::string_view word) {
    if (line_.substr(pos_, word.size()) != word ||
        (pos_ + word.size() < line_.size() && isNameChar(line_[pos_ + word.size()]))) {
      fail("expected '" + std::string(word) + "'");
    }
    pos_ += word.size();
  }

  // Parses line_[begin, end) and checks it only uses `allowed`.
  std::string checkedExpr(std::size_t begin, std::size_t end, Variable allowed, const std::string& what) {
    std::string_view text = line_.substr(begin, end - begin);
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
    std::size_t trail = text.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(text[trail - 1]))) --trail;
    std::string_view trimmed = text.substr(lead, trail - lead);
    try {
      Expr e = factineq::parse(trimmed);
      for (Variable v : freeVariables(e)) {
        if (v != allowed) {
          pos_ = begin + lead;
          fail(what + " may only use '" + std::string(1, variableName(allowed)) + "'");
        }
      }
    } catch (const ParseError& err) {
      pos_ = begin + lead + err.offset();
      fail(what + ": " + err.what());
    }
    return std::string(trimmed);
  }

  std::string_view line_;
  const std::string& path_;
  std::size_t lineNo_;
  std::size_t pos_ = 0;
  std::size_t nameOffset_ = 0;
};

}  // namespace

std::vector<BoundClaim> ClaimFile::claims() const {
  std::vector<BoundClaim> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    BoundClaim claim =
        BoundClaim::make(std::string(kUserNamespace) + e.name, e.summand, e.relation, e.bound, Variant::User);
    claim.note = path + ":" + std::to_string(e.line);
    out.push_back(std::move(claim));
  }
  return out;
}

ClaimFile parseClaimFile(std::string_view text, std::string path) {
  ClaimFile file;
  file.path = path;
  std::set<std::string> names;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) {
      LineParser parser(line, file.path, lineNo);
      ClaimEntry entry = parser.parse();
      if (!names.insert(entry.name).second) {
        throw ClaimFileError(file.path, lineNo, parser.nameOffset(), "duplicate claim name '" + entry.name + "'");
      }
      file.entries.push_back(std::move(entry));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return file;
}

ClaimFile loadClaimFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ClaimFileError(path.string(), 0, 0, "cannot read file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseClaimFile(buffer.str(), path.string());
}

}  // namespace factineq
