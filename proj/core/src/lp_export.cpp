#include "relocation/ilp.hpp"

namespace relo {

namespace {

void write_terms(std::ostream& os, const std::vector<LinTerm>& terms,
                 const std::vector<IlpVariable>& vars) {
  if (terms.empty()) {
    os << " 0";
    if (!vars.empty()) os << " " << vars[0].name;
    return;
  }
  int on_line = 0;
  for (size_t i = 0; i < terms.size(); ++i) {
    const long long c = terms[i].coef;
    if (i == 0) {
      os << " ";
      if (c == -1)
        os << "- ";
      else if (c < 0)
        os << "- " << -c << " ";
      else if (c != 1)
        os << c << " ";
    } else {
      os << (c < 0 ? " - " : " + ");
      const long long abs = c < 0 ? -c : c;
      if (abs != 1) os << abs << " ";
    }
    os << vars[terms[i].var].name;
    if (++on_line == 8 && i + 1 < terms.size()) {
      os << "\n ";
      on_line = 0;
    }
  }
}

}  // namespace

void export_lp(const IlpModel& model, std::ostream& sink) {
  sink << "\\ coupled-flow relocation model, variant "
       << to_string(model.variant) << "\n";
  sink << "Minimize\n obj:";
  write_terms(sink, model.objective, model.vars);
  sink << "\nSubject To\n";
  for (const IlpRow& r : model.rows) {
    if (model.vars.empty()) {
      sink << "\\ " << r.name << ": 0 "
           << (r.sense == RowSense::LE   ? "<="
               : r.sense == RowSense::GE ? ">="
                                         : "=")
           << " " << r.rhs << "\n";
      continue;
    }
    sink << " " << r.name << ":";
    write_terms(sink, r.terms, model.vars);
    sink << " "
         << (r.sense == RowSense::LE   ? "<="
             : r.sense == RowSense::GE ? ">="
                                       : "=")
         << " " << r.rhs << "\n";
  }

  sink << "Bounds\n";
  for (const IlpVariable& v : model.vars)
    if (!v.binary && v.ub >= 0)
      sink << " " << v.lb << " <= " << v.name << " <= " << v.ub << "\n";

  bool any_general = false;
  for (const IlpVariable& v : model.vars)
    if (!v.binary) {
      if (!any_general) sink << "Generals\n";
      any_general = true;
      sink << " " << v.name << "\n";
    }
  bool any_binary = false;
  for (const IlpVariable& v : model.vars)
    if (v.binary) {
      if (!any_binary) sink << "Binaries\n";
      any_binary = true;
      sink << " " << v.name << "\n";
    }
  sink << "End\n";
  if (!sink) throw SinkWriteError("LP export stream failure");
}

}  // namespace relo
