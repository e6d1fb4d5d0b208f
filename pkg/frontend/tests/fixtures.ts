/** Service responses captured from a live session, kept byte for byte.
 *
 * Tests that render or mock never rebuild these objects from parts;
 * they parse the captured text so the shapes stay honest.
 */

import { SessionStateDoc } from "../src/types.js";

/** size-3 session started from the line, before any slide */
export const LINE_STATE_RAW =
  '{"configuration":{"cells":[[2,0],[1,0],[0,0]],"labeled":true,"n":3},' +
  '"id":"a3ddbfcc90600c94","is_basis":true,"last_move":null,' +
  '"legal_moves":[' +
  '{"axes":["third"],"from":[0,0],"pair":[2,3],"pivot_anchor":[0,0],"to":[0,1]},' +
  '{"axes":["first"],"from":[1,0],"pair":[2,3],"pivot_anchor":[0,0],"to":[0,1]},' +
  '{"axes":["third"],"from":[1,0],"pair":[1,2],"pivot_anchor":[1,0],"to":[1,1]},' +
  '{"axes":["first"],"from":[2,0],"pair":[1,2],"pivot_anchor":[1,0],"to":[1,1]}],' +
  '"move_count":0,"n":3,' +
  '"permutation":{"n":3,"sigma":[3,2,1],"tau":[1,2,3]}}';

/** the same session after sliding the marble on (2,0) to (1,1) */
export const MOVED_STATE_RAW =
  '{"configuration":{"cells":[[1,0],[1,1],[0,0]],"labeled":true,"n":3},' +
  '"id":"a3ddbfcc90600c94","is_basis":true,' +
  '"last_move":{"axis":"first","from":[2,0],"pair":[1,2],"pivot_anchor":[1,0],"to":[1,1]},' +
  '"legal_moves":[' +
  '{"axes":["third"],"from":[0,0],"pair":[1,3],"pivot_anchor":[0,0],"to":[0,1]},' +
  '{"axes":["first"],"from":[1,0],"pair":[1,3],"pivot_anchor":[0,0],"to":[0,1]},' +
  '{"axes":["second"],"from":[1,0],"pair":[1,2],"pivot_anchor":[1,0],"to":[2,0]},' +
  '{"axes":["first"],"from":[1,1],"pair":[1,2],"pivot_anchor":[1,0],"to":[2,0]}],' +
  '"move_count":1,"n":3,' +
  '"permutation":{"n":3,"sigma":[2,3,1],"tau":[2,1,3]}}';

export function lineState(): SessionStateDoc {
  return JSON.parse(LINE_STATE_RAW) as SessionStateDoc;
}

export function movedState(): SessionStateDoc {
  return JSON.parse(MOVED_STATE_RAW) as SessionStateDoc;
}
