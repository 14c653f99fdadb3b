#ifndef SHARPDEG_JSON_IO_HPP
#define SHARPDEG_JSON_IO_HPP

#include <string>

#include "sharpdeg/bounds.hpp"
#include "sharpdeg/diagram.hpp"
#include "sharpdeg/enumeration.hpp"
#include "sharpdeg/quadrics.hpp"
#include "sharpdeg/transforms.hpp"

namespace sharpdeg {

// Diagram format: {"n":2,"d":3,"points":[{"m":[0,0],"sign":"P"},...]},
// points in ascending graded-lex order.  Rationals serialize as "p/q"
// strings to stay exact.
std::string diagram_to_json(const NewtonDiagram& D);
NewtonDiagram diagram_from_json(const std::string& text);

std::string receipt_to_json(const TransformReceipt& r);

std::string certificate_to_json(const Certificate& c);

std::string map_to_json(const MonomialMap& f);
MonomialMap map_from_json(const std::string& text);

std::string bound_report_to_json(const BoundReport& r);

std::string class_report_to_json(const ClassReport& r);

} // namespace sharpdeg

#endif
