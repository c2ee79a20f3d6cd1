#pragma once

#include <string>
#include <vector>

namespace minmin {

/*! \brief One row of the k = 2 clonoid/stability table: the class name and
 * the largest clones C with K C <= K (right) and C K <= K (left). */
struct table3_row
{
  const char* name;
  const char* right_clone;
  const char* left_clone;
};

const std::vector<table3_row>& table3();

/* the 26 fixed classes of the main enumeration theorem's last item */
const std::vector<std::string>& fixed_class_names();

/* lower covers of the fixed classes (plus the three degenerate downset
   classes), as registry class names */
const std::vector<std::pair<std::string, std::vector<std::string>>>& fixed_class_covers();

} // namespace minmin
