/**
 * Client-side CSV parsing (RFC 4180) for the upload preview.
 *
 * The table shape matches the render API: first header cell ignored, the
 * rest are attribute names; first column holds object names; remaining
 * cells must be numbers. All geometry stays on the server — this module
 * only validates enough to preview the table and build JSON requests.
 */

import type { DatasetData } from "./state.js";

export class CsvError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "CsvError";
  }
}

/** Split CSV text into records, honoring quoted fields and CRLF line ends. */
export function parseRecords(text: string): string[][] {
  const records: string[][] = [];
  let record: string[] = [];
  let cell = "";
  let inQuotes = false;
  let sawAny = false;

  const pushCell = () => {
    record.push(cell);
    cell = "";
  };
  const pushRecord = () => {
    pushCell();
    records.push(record);
    record = [];
  };

  for (let i = 0; i < text.length; i++) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          cell += '"';
          i++;
        } else {
          inQuotes = false;
        }
      } else {
        cell += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        inQuotes = true;
        sawAny = true;
        break;
      case ",":
        pushCell();
        sawAny = true;
        break;
      case "\r":
        if (text[i + 1] === "\n") i++;
        pushRecord();
        break;
      case "\n":
        pushRecord();
        break;
      default:
        cell += ch;
        sawAny = true;
    }
  }
  if (inQuotes) {
    throw new CsvError("unterminated quoted field");
  }
  if (cell.length > 0 || record.length > 0) {
    pushRecord();
  }
  if (!sawAny) {
    throw new CsvError("the file is empty");
  }
  // Drop records that are entirely blank (e.g. trailing newlines).
  return records.filter((cells) => cells.some((c) => c.trim() !== ""));
}

function parseNumber(raw: string, objectName: string, columnName: string): number {
  const trimmed = raw.trim();
  const value = trimmed === "" ? NaN : Number(trimmed);
  if (!Number.isFinite(value)) {
    throw new CsvError(
      `cell (${objectName}, ${columnName}) is not a number: "${raw}"`,
    );
  }
  return value;
}

/** Parse CSV text into the dataset shape the render API expects. */
export function parseDataset(text: string): DatasetData {
  const records = parseRecords(text);
  if (records.length < 2) {
    throw new CsvError("need a header row plus at least one data row");
  }
  const header = records[0];
  const attributeNames = header.slice(1).map((name) => name.trim());
  if (attributeNames.length < 3) {
    throw new CsvError(
      `need at least 3 attribute columns, found ${attributeNames.length}`,
    );
  }
  const objectNames: string[] = [];
  const values: number[][] = [];
  for (let r = 1; r < records.length; r++) {
    const record = records[r];
    if (record.length !== header.length) {
      throw new CsvError(
        `row ${r + 1} has ${record.length} cells, expected ${header.length}`,
      );
    }
    const objectName = record[0].trim();
    objectNames.push(objectName);
    values.push(
      record
        .slice(1)
        .map((cell, c) => parseNumber(cell, objectName, attributeNames[c])),
    );
  }
  return { object_names: objectNames, attribute_names: attributeNames, values };
}

/** Uploads must be CSV; spreadsheets need converting first. */
export function checkUploadName(fileName: string): string | null {
  const lower = fileName.toLowerCase();
  if (lower.endsWith(".xlsx") || lower.endsWith(".xls") || lower.endsWith(".ods")) {
    return "Spreadsheet files are not supported — export the sheet as .csv and upload that.";
  }
  return null;
}
