#include "minmin/tables.hpp"

namespace minmin {

const std::vector<table3_row>& table3()
{
  static const std::vector<table3_row> rows = {
      { "clAll", "clAll", "clAll" },
      { "clEiio", "clOI", "clM" },
      { "clEioi", "clOI", "clM" },
      { "clEiii", "clOI", "clU" },
      { "clEq", "clOI", "clAll" },
      { "clOXC", "clOX", "clM" },
      { "clXOC", "clXI", "clM" },
      { "clIXC", "clOX", "clM" },
      { "clXIC", "clXI", "clM" },
      { "clOX", "clOX", "clOX" },
      { "clXO", "clXI", "clOX" },
      { "clIX", "clOX", "clXI" },
      { "clXI", "clXI", "clXI" },
      { "clOOC", "clOI", "clM" },
      { "clIIC", "clOI", "clM" },
      { "clOO", "clOI", "clOX" },
      { "clII", "clOI", "clXI" },
      { "clOIC", "clOI", "clM" },
      { "clIOC", "clOI", "clM" },
      { "clOICO", "clOI", "clMo" },
      { "clIOCI", "clOI", "clMi" },
      { "clOICI", "clOI", "clMi" },
      { "clIOCO", "clOI", "clMo" },
      { "clOI", "clOI", "clOI" },
      { "clIO", "clOI", "clOI" },
      { "clSmin", "clS", "clU" },
      { "clSminOX", "clSc", "clU" },
      { "clSminXO", "clSc", "clU" },
      { "clSminOICO", "clSc", "clMU" },
      { "clSminIOCO", "clSc", "clMU" },
      { "clSminOI", "clSc", "clTcU" },
      { "clSminIO", "clSc", "clTcU" },
      { "clSminOO", "clSc", "clU" },
      { "clM", "clM", "clM" },
      { "clMneg", "clM", "clM" },
      { "clMo", "clMo", "clMo" },
      { "clMineg", "clMi", "clMo" },
      { "clMi", "clMi", "clMi" },
      { "clMoneg", "clMo", "clMi" },
      { "clMc", "clMc", "clMc" },
      { "clMcneg", "clMc", "clMc" },
      { "clU", "clU", "clU" },
      { "clWneg", "clW", "clU" },
      { "clTcUCO", "clTcU", "clMU" },
      { "clTcWnegCO", "clTcW", "clMU" },
      { "clTcU", "clTcU", "clTcU" },
      { "clTcWneg", "clTcW", "clTcU" },
      { "clMU", "clMU", "clMU" },
      { "clMWneg", "clMW", "clMU" },
      { "clMcU", "clMcU", "clMcU" },
      { "clMcWneg", "clMcW", "clMcU" },
      { "clUOO", "clTcU", "clU" },
      { "clWnegOO", "clTcW", "clU" },
      { "clUWneg", "clSM", "clU" },
      { "clRefl", "clS", "clAll" },
      { "clReflOOC", "clSc", "clM" },
      { "clReflIIC", "clSc", "clM" },
      { "clReflOO", "clSc", "clOX" },
      { "clReflII", "clSc", "clXI" },
      { "clVak", "clAll", "clAll" },
      { "clVako", "clAll", "clOX" },
      { "clVaki", "clAll", "clXI" },
      { "clEmpty", "clAll", "clAll" },
  };
  return rows;
}

const std::vector<std::string>& fixed_class_names()
{
  static const std::vector<std::string> names = {
      "clEiio", "clEioi", "clEq",   "clOXC",     "clXOC",     "clIXC",    "clXIC",
      "clOOC",  "clOIC",  "clIOC",  "clIIC",     "clOICI",    "clIOCI",   "clIX",
      "clXI",   "clII",   "clM",    "clMi",      "clMneg",    "clMoneg",  "clRefl",
      "clReflOOC", "clReflIIC", "clReflII", "clVak", "clVaki" };
  return names;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& fixed_class_covers()
{
  static const std::vector<std::pair<std::string, std::vector<std::string>>> covers = {
      { "clAll", { "clEiio", "clEioi", "clEiii" } },
      { "clEq", { "clOOC", "clIIC", "clRefl" } },
      { "clEiio", { "clOXC", "clXIC", "clEq" } },
      { "clEioi", { "clXOC", "clIXC", "clEq" } },
      { "clOXC", { "clOX", "clOOC", "clOIC" } },
      { "clXOC", { "clXO", "clOOC", "clIOC" } },
      { "clIXC", { "clIIC", "clIOC", "clIX" } },
      { "clXIC", { "clIIC", "clOIC", "clXI" } },
      { "clOOC", { "clOO", "clReflOOC" } },
      { "clIIC", { "clReflIIC", "clII" } },
      { "clOIC", { "clOICO", "clOICI", "clM" } },
      { "clIOC", { "clIOCO", "clIOCI", "clMneg" } },
      { "clOICI", { "clOI", "clMi" } },
      { "clIOCI", { "clIO", "clMoneg" } },
      { "clIX", { "clII", "clIOCI" } },
      { "clXI", { "clII", "clOICI" } },
      { "clII", { "clReflII" } },
      { "clM", { "clMo", "clMi", "clVak" } },
      { "clMneg", { "clMineg", "clMoneg", "clVak" } },
      { "clMi", { "clMc", "clVaki" } },
      { "clMoneg", { "clMcneg", "clVaki" } },
      { "clRefl", { "clReflOOC", "clReflIIC" } },
      { "clReflOOC", { "clReflOO", "clVak" } },
      { "clReflIIC", { "clReflII", "clVak" } },
      { "clReflII", { "clVaki" } },
      { "clVak", { "clVako", "clVaki" } },
      { "clVaki", { "clEmpty" } },
      { "clVako", { "clEmpty" } },
      { "clEmpty", {} },
  };
  return covers;
}

} // namespace minmin
