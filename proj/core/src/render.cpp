#include "liespec/render.hpp"

#include <sstream>

#include "json.hpp"

namespace liespec::render {

using nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::CSV;
  if (text == "json") return OutputFormat::JSON;
  return std::nullopt;
}

namespace {

std::string nu_string(const spectrum::NuVector& nu) {
  std::ostringstream os;
  os << "(" << nu.nu[0] << "," << nu.nu[1] << "," << nu.nu[2] << "," << nu.nu[3] << ")";
  return os.str();
}

ordered_json nu_json(const spectrum::NuVector& nu) {
  return ordered_json::array({nu.nu[0], nu.nu[1], nu.nu[2], nu.nu[3]});
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string spectrum_output(spectrum::GroupId g, const std::vector<spectrum::SpectrumEntry>& entries,
                            const BigRat& gamma, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Table: {
      os << "group " << spectrum::name(g) << ", gamma " << rat_string(gamma) << "\n";
      os << "lambda\tmultiplicity\tweights\n";
      for (const auto& e : entries) {
        os << rat_string(e.lambda) << "\t" << e.multiplicity.str() << "\t";
        for (std::size_t i = 0; i < e.contributions.size(); ++i) {
          if (i) os << " ";
          os << nu_string(e.contributions[i].nu) << ":" << e.contributions[i].dimension.str();
        }
        os << "\n";
      }
      return os.str();
    }
    case OutputFormat::CSV: {
      os << "group,lambda,multiplicity,nu1,nu2,nu3,nu4,dim\n";
      for (const auto& e : entries)
        for (const auto& c : e.contributions) {
          os << spectrum::name(g) << "," << rat_string(e.lambda) << "," << e.multiplicity.str();
          for (int v : c.nu.nu) os << "," << v;
          os << "," << c.dimension.str() << "\n";
        }
      return os.str();
    }
    case OutputFormat::JSON: {
      ordered_json j;
      j["group"] = std::string(spectrum::name(g));
      j["gamma"] = rat_string(gamma);
      j["entries"] = ordered_json::array();
      for (const auto& e : entries) {
        ordered_json entry;
        entry["lambda"] = rat_string(e.lambda);
        entry["multiplicity"] = e.multiplicity.str();
        entry["weights"] = ordered_json::array();
        for (const auto& c : e.contributions) {
          ordered_json w;
          w["nu"] = nu_json(c.nu);
          w["dim"] = c.dimension.str();
          entry["weights"].push_back(std::move(w));
        }
        j["entries"].push_back(std::move(entry));
      }
      return dump(j);
    }
  }
  return {};
}

std::string counts_output(const CountQuery& q, OutputFormat fmt) {
  const char* kind = q.kind == numtheory::CountKind::Strict ? "strict" : "all";
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Table: {
      os << name(q.form) << " k=" << q.k << " (" << kind << "): " << q.value << "\n";
      if (q.oracle)
        os << "oracle: " << *q.oracle << " (" << (*q.oracle == q.value ? "match" : "MISMATCH")
           << ")\n";
      return os.str();
    }
    case OutputFormat::CSV: {
      os << "form,k,kind,value";
      if (q.oracle) os << ",oracle,match";
      os << "\n" << name(q.form) << "," << q.k << "," << kind << "," << q.value;
      if (q.oracle) os << "," << *q.oracle << "," << (*q.oracle == q.value ? "true" : "false");
      os << "\n";
      return os.str();
    }
    case OutputFormat::JSON: {
      ordered_json j;
      j["form"] = std::string(name(q.form));
      j["k"] = q.k;
      j["kind"] = kind;
      j["value"] = q.value;
      if (q.oracle) {
        j["oracle"] = *q.oracle;
        j["match"] = *q.oracle == q.value;
      }
      return dump(j);
    }
  }
  return {};
}

std::string characterization_output(const crosscheck::CharacterizationResult& res, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Table: {
      os << "group " << spectrum::name(res.group) << ", lambda " << rat_string(res.lambda) << "\n";
      if (res.is_eigenvalue)
        os << "eigenvalue: yes (case " << crosscheck::name(res.case_label) << "), predicted weights "
           << res.predicted_weight_count << "\n";
      else
        os << "eigenvalue: no\n";
      return os.str();
    }
    case OutputFormat::CSV: {
      os << "group,lambda,is_eigenvalue,case,predicted_weight_count\n";
      os << spectrum::name(res.group) << "," << rat_string(res.lambda) << ","
         << (res.is_eigenvalue ? "true" : "false") << "," << crosscheck::name(res.case_label) << ","
         << res.predicted_weight_count << "\n";
      return os.str();
    }
    case OutputFormat::JSON: {
      ordered_json j;
      j["group"] = std::string(spectrum::name(res.group));
      j["lambda"] = rat_string(res.lambda);
      j["is_eigenvalue"] = res.is_eigenvalue;
      j["case"] = std::string(crosscheck::name(res.case_label));
      j["predicted_weight_count"] = res.predicted_weight_count;
      return dump(j);
    }
  }
  return {};
}

std::string verify_output(const std::vector<VerifySummary>& sections, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Table: {
      for (const auto& s : sections) {
        os << "[" << s.scope << "] " << (s.ok ? "ok" : "MISMATCH") << "\n";
        for (const auto& n : s.notes) os << "  note: " << n << "\n";
        for (const auto& l : s.lines) os << "  " << l << "\n";
        if (!s.errata.empty()) {
          os << "  erratum report (form,k,formula_value,oracle_value,theorem):\n";
          for (const auto& e : s.errata) os << "  " << to_line(e) << "\n";
        }
      }
      return os.str();
    }
    case OutputFormat::CSV: {
      os << "scope,record\n";
      for (const auto& s : sections) {
        os << s.scope << "," << (s.ok ? "ok" : "mismatch") << "\n";
        for (const auto& l : s.lines) os << s.scope << "," << l << "\n";
        for (const auto& e : s.errata) os << s.scope << "," << to_line(e) << "\n";
      }
      return os.str();
    }
    case OutputFormat::JSON: {
      ordered_json j = ordered_json::array();
      for (const auto& s : sections) {
        ordered_json sec;
        sec["scope"] = s.scope;
        sec["ok"] = s.ok;
        sec["notes"] = s.notes;
        sec["detail"] = s.lines;
        sec["errata"] = ordered_json::array();
        for (const auto& e : s.errata) {
          ordered_json rec;
          rec["form"] = e.form;
          rec["k"] = e.k;
          rec["formula_value"] = e.formula_value;
          rec["oracle_value"] = e.oracle_value;
          rec["theorem"] = e.theorem;
          sec["errata"].push_back(std::move(rec));
        }
        j.push_back(std::move(sec));
      }
      return dump(j);
    }
  }
  return {};
}

}  // namespace liespec::render
