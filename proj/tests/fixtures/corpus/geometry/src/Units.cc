#include <map>
#include <string>

#define DEFINE_UNIT(name, value) \
  { #name, value }

#define LONG_COMMENT_MACRO 1 /* a comment
                                that continues */

static const std::map<std::string, double> kUnits = {
  DEFINE_UNIT(mm, 1.),
  DEFINE_UNIT(cm, 10.),
  DEFINE_UNIT(m, 1000.),
  DEFINE_UNIT(km, 1.e6)
};

double UnitValue(const std::string& symbol)
{
  auto it = kUnits.find(symbol);
  return it == kUnits.end() ? 0. : it->second;
}
