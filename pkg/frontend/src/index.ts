export { Table, loadTable, parseCsv } from "./csv";
export { renderFigure, Figure } from "./render";
export { FIGURE_KINDS, FIGURE_SIZE, FigureKind, REQUIRED_COLUMNS, SchemaError, isFigureKind, validateHeader } from "./schema";
export { HeatPanel, LineSeries, brightestCell, heatmapPanels } from "./series";
export { run } from "./cli";
