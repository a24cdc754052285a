/**
 * Pure view-model builders: API payloads in, render-ready values out.
 *
 * Everything here is a plain function of the last API response, so the
 * contract tests can assert that each rendered number equals the number
 * the service returned.  No quantum math happens client-side.
 */

import type {
  AmplitudeEntry,
  HistoryEvent,
  SeriesResponse,
  SessionState,
} from './api.js'

export interface SentenceBar {
  sentence: number
  pTrue: number
  pFalse: number
  pLatent: number
  /** Bar segment widths in percent; exactly 100 * the API probabilities. */
  trueWidthPct: number
  falseWidthPct: number
  latentWidthPct: number
  /** Definite verdict when one outcome carries (almost) all the weight. */
  verdict: 'true' | 'false' | 'latent' | 'superposed'
}

export function sentenceBars(state: SessionState): SentenceBar[] {
  return state.probabilities.map((p) => {
    let verdict: SentenceBar['verdict'] = 'superposed'
    if (p.p_true >= 0.999) verdict = 'true'
    else if (p.p_false >= 0.999) verdict = 'false'
    else if (p.p_latent >= 0.999) verdict = 'latent'
    return {
      sentence: p.sentence,
      pTrue: p.p_true,
      pFalse: p.p_false,
      pLatent: p.p_latent,
      trueWidthPct: 100 * p.p_true,
      falseWidthPct: 100 * p.p_false,
      latentWidthPct: 100 * p.p_latent,
      verdict,
    }
  })
}

export interface AmplitudeView {
  label: string
  magnitude: number
  /** Bar length in percent of the widest amplitude shown. */
  lengthPct: number
  /** Complex phase mapped onto the color wheel, degrees in [0, 360). */
  hueDeg: number
  detail: string
}

export function phaseHue(phase: number): number {
  const turn = phase / (2 * Math.PI)
  return ((turn % 1) + 1) % 1 * 360
}

export function amplitudeList(state: SessionState): AmplitudeView[] {
  const entries = state.top_amplitudes
  const widest = entries.reduce((m, e) => Math.max(m, e.magnitude), 0)
  return entries.map((e: AmplitudeEntry) => ({
    label: e.label,
    magnitude: e.magnitude,
    lengthPct: widest > 0 ? (100 * e.magnitude) / widest : 0,
    hueDeg: phaseHue(e.phase),
    detail: `${e.re.toFixed(4)} ${e.im >= 0 ? '+' : '-'} ${Math.abs(e.im).toFixed(4)}i`,
  }))
}

export interface ChartGeometry {
  width: number
  height: number
  padX: number
  padY: number
}

export const DEFAULT_GEOMETRY: ChartGeometry = { width: 640, height: 220, padX: 40, padY: 16 }

export interface SeriesChart {
  /** SVG path strings for the three probability curves on a shared [0,1] axis. */
  truePath: string
  falsePath: string
  latentPath: string
  /** x pixel of the current sim time, or null when outside the window. */
  markerX: number | null
  window: [number, number]
}

function pathFrom(times: number[], values: number[], g: ChartGeometry, t0: number, t1: number): string {
  const spanX = g.width - 2 * g.padX
  const spanY = g.height - 2 * g.padY
  return times
    .map((t, i) => {
      const x = g.padX + ((t - t0) / (t1 - t0)) * spanX
      const y = g.height - g.padY - values[i] * spanY
      return `${i === 0 ? 'M' : 'L'}${x.toFixed(2)},${y.toFixed(2)}`
    })
    .join(' ')
}

export function probabilityFromY(y: number, g: ChartGeometry = DEFAULT_GEOMETRY): number {
  return (g.height - g.padY - y) / (g.height - 2 * g.padY)
}

export function seriesChart(
  series: SeriesResponse,
  simTime: number,
  geometry: ChartGeometry = DEFAULT_GEOMETRY,
): SeriesChart {
  const t0 = series.times[0]
  const t1 = series.times[series.times.length - 1]
  const marker =
    simTime >= t0 && simTime <= t1
      ? geometry.padX + ((simTime - t0) / (t1 - t0)) * (geometry.width - 2 * geometry.padX)
      : null
  return {
    truePath: pathFrom(series.times, series.p_true, geometry, t0, t1),
    falsePath: pathFrom(series.times, series.p_false, geometry, t0, t1),
    latentPath: pathFrom(series.times, series.p_latent, geometry, t0, t1),
    markerX: marker,
    window: [t0, t1],
  }
}

/** Parse the polyline back into (x, y) points; used by tests and the hover readout. */
export function pathPoints(path: string): Array<[number, number]> {
  return path
    .split(' ')
    .filter((part) => part.length > 1)
    .map((part) => {
      const [x, y] = part.slice(1).split(',')
      return [Number(x), Number(y)] as [number, number]
    })
}

/** Hint text for an unusable chart window, or null when the window is fine. */
export function windowHint(from: number, to: number): string | null {
  if (!(from < to)) return 'widen the window: the end time must exceed the start time'
  return null
}

export function formatEvent(event: HistoryEvent): string {
  const t = event.sim_time.toFixed(4)
  if (event.action === 'evolve') return `t=${t}  evolved by dt=${event.dt?.toFixed(4)}`
  if (event.action === 'reset') return `t=${t}  reset to the unmeasured state`
  const p = event.probability === null ? '' : ` (p=${event.probability.toFixed(4)})`
  return `t=${t}  ${event.action} sentence ${event.sentence} -> ${event.value}${p}`
}

export function historyLines(events: HistoryEvent[]): string[] {
  return events.map(formatEvent)
}
