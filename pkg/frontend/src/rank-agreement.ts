/**
 * Agreement badge between two service-produced orderings.
 *
 * This is interface-level bookkeeping over alternative ids (concordant minus
 * discordant pairs over all pairs), not part of the numeric decision
 * pipeline: every ranking it compares came from the service.
 */

export function rankAgreement(previous: string[], current: string[]): number {
  if (previous.length !== current.length || previous.length < 2) return 1;
  const posA = new Map(previous.map((id, i) => [id, i]));
  const posB = new Map(current.map((id, i) => [id, i]));
  for (const id of previous) {
    if (!posB.has(id)) return 1;
  }
  let concordant = 0;
  let discordant = 0;
  const ids = [...posA.keys()];
  for (let i = 0; i < ids.length; i++) {
    for (let j = i + 1; j < ids.length; j++) {
      const a = posA.get(ids[i]!)! - posA.get(ids[j]!)!;
      const b = posB.get(ids[i]!)! - posB.get(ids[j]!)!;
      if (a * b > 0) concordant += 1;
      else if (a * b < 0) discordant += 1;
    }
  }
  const pairs = (ids.length * (ids.length - 1)) / 2;
  return (concordant - discordant) / pairs;
}
