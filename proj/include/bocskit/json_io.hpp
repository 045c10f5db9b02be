#pragma once

#include <string>

#include <json.hpp>

#include "bocskit/classify.hpp"
#include "bocskit/rep.hpp"

namespace bocskit {

using Json = nlohmann::ordered_json;

Json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const Json& j);

Json moduleToJson(const BocsModule& m);
BocsModule moduleFromJson(const Bocs& b, const Json& j);

// N/R object and morphism documents; the basis conventions are documented in
// the README (vbar items in basis order, module bases vertex-major).
Json nObjectToJson(const NObject& obj);
NObject nObjectFromJson(const Bocs& b, const Json& j);
Json rObjectToJson(const RObject& obj);
RObject rObjectFromJson(const Bocs& b, const Json& j);

Json complexToJson(const BocsComplex& c);
Json dualPresentationToJson(const DualPresentation& p);
Json dimReportToJson(const DimReport& r);
Json classificationToJson(const ClassificationReport& r);
Json boxTableToJson(const Bocs& b);

}  // namespace bocskit
