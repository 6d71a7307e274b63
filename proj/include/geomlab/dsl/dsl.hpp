#pragma once

#include "geomlab/dsl/ast.hpp"
#include "geomlab/dsl/catalog_file.hpp"
#include "geomlab/dsl/evaluate.hpp"
#include "geomlab/dsl/parser.hpp"
