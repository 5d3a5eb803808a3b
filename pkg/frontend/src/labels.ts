/** Cell labels in the engine notation: column letters then 1-based row.
 *
 * Cells are numbered row-major from row 1, so cell 0 is "a1" and the
 * last cell of an 11-board is "k11". Columns past "z" continue "aa",
 * "ab" and so on.
 */

export function cellLabel(cell: number, side: number): string {
  const row = Math.floor(cell / side);
  const col = cell % side;
  let letters = "";
  let c = col + 1;
  while (c > 0) {
    const rem = (c - 1) % 26;
    letters = String.fromCharCode(97 + rem) + letters;
    c = Math.floor((c - 1) / 26);
  }
  return `${letters}${row + 1}`;
}

export function parseLabel(label: string, side: number): number {
  let i = 0;
  while (i < label.length && /[a-zA-Z]/.test(label[i])) i += 1;
  const letters = label.slice(0, i);
  const digits = label.slice(i);
  if (!letters || !digits || !/^\d+$/.test(digits)) {
    throw new Error(`bad cell label ${JSON.stringify(label)}`);
  }
  let col = 0;
  for (const ch of letters.toLowerCase()) {
    col = col * 26 + (ch.charCodeAt(0) - 96);
  }
  const row = parseInt(digits, 10);
  if (row < 1 || row > side || col < 1 || col > side) {
    throw new Error(`label ${JSON.stringify(label)} is off the board`);
  }
  return (row - 1) * side + (col - 1);
}
