/**
 * Contract tests against recorded API responses: every number the view
 * model hands to the renderer must equal a number the service returned.
 */

import { describe, expect, it } from 'vitest'

import type { HistoryEvent, SeriesResponse, SessionState } from '../src/api.js'
import {
  DEFAULT_GEOMETRY,
  amplitudeList,
  historyLines,
  pathPoints,
  phaseHue,
  probabilityFromY,
  sentenceBars,
  seriesChart,
  windowHint,
} from '../src/view.js'

import evolvedSession from './fixtures/evolved_session.json'
import freshSession from './fixtures/fresh_session.json'
import history from './fixtures/history.json'
import measureResponse from './fixtures/measure_response.json'
import seriesCollapsed from './fixtures/series_collapsed.json'
import seriesUnmeasured from './fixtures/series_unmeasured.json'

const freshState = freshSession.state as SessionState
const measuredState = measureResponse.state as SessionState
const evolvedState = evolvedSession.state as SessionState

describe('sentence bars', () => {
  it('shows exactly the API probabilities for a fresh double-liar session', () => {
    const bars = sentenceBars(freshState)
    expect(bars).toHaveLength(2)
    for (const [i, bar] of bars.entries()) {
      const wire = freshState.probabilities[i]
      expect(bar.pTrue).toBe(wire.p_true)
      expect(bar.pFalse).toBe(wire.p_false)
      expect(bar.pLatent).toBe(wire.p_latent)
      expect(bar.trueWidthPct).toBe(100 * wire.p_true)
      expect(bar.falseWidthPct).toBe(100 * wire.p_false)
      expect(bar.latentWidthPct).toBe(100 * wire.p_latent)
    }
    expect(bars[0].pTrue).toBe(0.25)
    expect(bars[0].pLatent).toBe(0.5)
    expect(bars[0].verdict).toBe('superposed')
  })

  it('marks the hypothesized sentence as a definite verdict', () => {
    const bars = sentenceBars(measuredState)
    expect(bars[0].pTrue).toBe(1.0)
    expect(bars[0].verdict).toBe('true')
    expect(bars[0].trueWidthPct).toBe(100)
  })

  it('tracks the cycle after one reading step', () => {
    const bars = sentenceBars(evolvedState)
    const wire = evolvedState.probabilities
    expect(bars[1].pFalse).toBe(wire[1].p_false)
    expect(bars[1].verdict).toBe('false')
    expect(bars[0].verdict).toBe('latent')
  })
})

describe('amplitude list', () => {
  it('uses the API magnitudes and labels verbatim', () => {
    const amps = amplitudeList(freshState)
    expect(amps).toHaveLength(freshState.top_amplitudes.length)
    for (const [i, amp] of amps.entries()) {
      const wire = freshState.top_amplitudes[i]
      expect(amp.magnitude).toBe(wire.magnitude)
      expect(amp.label).toBe(wire.label)
    }
    // Four cycle states at |a| = 1/2, everything else zero.
    expect(amps.slice(0, 4).every((a) => a.magnitude === 0.5)).toBe(true)
    expect(amps.slice(0, 4).every((a) => a.lengthPct === 100)).toBe(true)
  })

  it('maps phase onto the color wheel', () => {
    expect(phaseHue(0)).toBe(0)
    expect(phaseHue(Math.PI)).toBe(180)
    expect(phaseHue(-Math.PI / 2)).toBe(270)
    expect(phaseHue(2 * Math.PI)).toBeCloseTo(0, 10)
  })
})

describe('series chart', () => {
  it('renders three flat lines at 0.25/0.25/0.5 for an unmeasured session', () => {
    const series = seriesUnmeasured as SeriesResponse
    const chart = seriesChart(series, 0)
    for (const [path, level] of [
      [chart.truePath, 0.25],
      [chart.falsePath, 0.25],
      [chart.latentPath, 0.5],
    ] as Array<[string, number]>) {
      const points = pathPoints(path)
      expect(points).toHaveLength(series.times.length)
      const ys = points.map(([, y]) => y)
      expect(Math.max(...ys) - Math.min(...ys)).toBeLessThanOrEqual(0.011)
      expect(probabilityFromY(ys[0])).toBeCloseTo(level, 3)
    }
    expect(chart.markerX).toBe(DEFAULT_GEOMETRY.padX)
  })

  it('oscillates after a collapse and keeps the marker inside the window', () => {
    const series = seriesCollapsed as SeriesResponse
    const simTime = evolvedSession.sim_time as number
    const chart = seriesChart(series, simTime)
    const ys = pathPoints(chart.truePath).map(([, y]) => probabilityFromY(y))
    expect(Math.max(...ys)).toBeGreaterThan(0.95)
    expect(Math.min(...ys)).toBeLessThan(0.05)
    expect(chart.markerX).not.toBeNull()
    const [t0, t1] = chart.window
    expect(simTime).toBeGreaterThanOrEqual(t0)
    expect(simTime).toBeLessThanOrEqual(t1)
  })

  it('puts the marker at null outside the window', () => {
    const chart = seriesChart(seriesUnmeasured as SeriesResponse, 99)
    expect(chart.markerX).toBeNull()
  })

  it('flags an empty window with a hint', () => {
    expect(windowHint(1.0, 1.0)).not.toBeNull()
    expect(windowHint(2.0, 1.0)).not.toBeNull()
    expect(windowHint(0.0, 6.28)).toBeNull()
  })
})

describe('history', () => {
  it('keeps the API event order', () => {
    const events = history.events as HistoryEvent[]
    const lines = historyLines(events)
    expect(lines).toHaveLength(events.length)
    expect(lines[0]).toContain('hypothesize sentence 1 -> true')
    expect(lines[1]).toContain('evolved by dt=1.5708')
    // Order matches /history exactly: line i is built from events[i].
    for (const [i, event] of events.entries()) {
      expect(lines[i]).toContain(`t=${event.sim_time.toFixed(4)}`)
    }
  })
})
